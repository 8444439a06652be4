//! Certified irreducibility over `Q` for integer polynomials.
//!
//! [`decide_irreducible`] runs a fixed pipeline: rational roots, Eisenstein
//! after a shift, a single irreducible reduction mod `p`, the degree sieve
//! over many primes, and finally Hensel lifting with bounded recombination to
//! exhibit a factor, or to rule out every factor when the bound covers all
//! subsets. Every positive answer carries a certificate that
//! [`IrredVerdict::verify`] re-checks from scratch.

mod fp;
mod hensel;

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::laurent::IntPoly;
use crate::par::Exec;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IrredError {
    #[error("constant polynomials have no irreducibility status")]
    Constant,
    #[error("content {0} is not 1")]
    NotPrimitive(BigInt),
}

/// Why a prime cannot be used for mod-`p` factor degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Unusable {
    DividesLeading,
    NotSquarefree,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum IrredCertificate {
    /// Degree one.
    Linear,
    /// Degree two or three without a rational root.
    NoRationalRoot,
    /// `f(t + shift)` is Eisenstein at `prime`.
    Eisenstein { shift: i64, prime: u64 },
    /// `f` stays irreducible mod `prime`.
    ModP { prime: u64 },
    /// The factor degrees mod these primes admit no common proper subset sum.
    Sieve {
        primes: Vec<u64>,
        degrees: Vec<Vec<usize>>,
    },
    /// No product of at most half of the `factors` lifts modulo
    /// `prime^exponent` divides `f`.
    Recombination {
        prime: u64,
        exponent: u32,
        factors: usize,
    },
}

impl fmt::Display for IrredCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrredCertificate::Linear => write!(f, "Linear"),
            IrredCertificate::NoRationalRoot => write!(f, "NoRationalRoot"),
            IrredCertificate::Eisenstein { shift, prime } => {
                write!(f, "Eisenstein({shift}, {prime})")
            }
            IrredCertificate::ModP { prime } => write!(f, "ModP({prime})"),
            IrredCertificate::Sieve { primes, .. } => write!(f, "Sieve({} primes)", primes.len()),
            IrredCertificate::Recombination {
                prime,
                exponent,
                factors,
            } => {
                write!(f, "Recombination({prime}^{exponent}, {factors} factors)")
            }
        }
    }
}

impl IrredCertificate {
    pub fn tier(&self) -> &'static str {
        match self {
            IrredCertificate::Linear => "linear",
            IrredCertificate::NoRationalRoot => "no-rational-root",
            IrredCertificate::Eisenstein { .. } => "eisenstein",
            IrredCertificate::ModP { .. } => "modp",
            IrredCertificate::Sieve { .. } => "sieve",
            IrredCertificate::Recombination { .. } => "recombination",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum IrredVerdict {
    Irreducible {
        certificate: IrredCertificate,
    },
    /// `factor` is a proper factor dividing the input exactly.
    Reducible {
        factor: IntPoly,
    },
    Unknown {
        log: Vec<String>,
    },
}

impl fmt::Display for IrredVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrredVerdict::Irreducible { certificate } => write!(f, "Irreducible({certificate})"),
            IrredVerdict::Reducible { factor } => write!(f, "Reducible({factor})"),
            IrredVerdict::Unknown { .. } => write!(f, "Unknown"),
        }
    }
}

impl IrredVerdict {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, IrredVerdict::Irreducible { .. })
    }

    pub fn certificate(&self) -> Option<&IrredCertificate> {
        match self {
            IrredVerdict::Irreducible { certificate } => Some(certificate),
            _ => None,
        }
    }

    /// Re-checks the verdict against `f` without reusing any state from the
    /// search. `Unknown` always verifies.
    pub fn verify(&self, f: &IntPoly) -> Result<(), String> {
        let deg = f.degree().ok_or("zero polynomial")?;
        match self {
            IrredVerdict::Unknown { .. } => Ok(()),
            IrredVerdict::Reducible { factor } => {
                let d = factor.degree().unwrap_or(0);
                if d == 0 || d >= deg {
                    return Err(format!("{factor} is not a proper factor"));
                }
                f.div_exact(factor)
                    .map(|_| ())
                    .ok_or_else(|| format!("{factor} does not divide {f}"))
            }
            IrredVerdict::Irreducible { certificate } => verify_certificate(f, certificate),
        }
    }
}

fn verify_certificate(f: &IntPoly, cert: &IrredCertificate) -> Result<(), String> {
    let deg = f.degree().ok_or("zero polynomial")?;
    if !f.content().is_one() {
        return Err("content is not 1".into());
    }
    match cert {
        IrredCertificate::Linear => (deg == 1).then_some(()).ok_or("degree is not 1".into()),
        IrredCertificate::NoRationalRoot => {
            if !(2..=3).contains(&deg) {
                return Err("degree is not 2 or 3".into());
            }
            if deg == 2 {
                let (a, b, c) = (f.coeff(2), f.coeff(1), f.coeff(0));
                let disc: BigInt = &b * &b - BigInt::from(4) * a * c;
                let square = !disc.is_negative() && {
                    let r = disc.sqrt();
                    &r * &r == disc
                };
                return (!square)
                    .then_some(())
                    .ok_or("discriminant is a square".into());
            }
            match rational_root_by_evaluation(f) {
                Some(r) => Err(format!("rational root {r}")),
                None => Ok(()),
            }
        }
        IrredCertificate::Eisenstein { shift, prime } => {
            let g = f.shift_compose(&BigInt::from(*shift));
            if is_eisenstein(&g, *prime) {
                Ok(())
            } else {
                Err(format!("f(t{shift:+}) is not Eisenstein at {prime}"))
            }
        }
        IrredCertificate::ModP { prime } => match factor_degrees_mod_p(f, *prime) {
            Ok(d) if d == vec![deg] => Ok(()),
            Ok(d) => Err(format!("degrees mod {prime} are {d:?}")),
            Err(e) => Err(format!("prime {prime} unusable: {e:?}")),
        },
        IrredCertificate::Sieve { primes, degrees } => {
            if primes.len() != degrees.len() || primes.is_empty() {
                return Err("malformed sieve".into());
            }
            let mut inter = SubsetSums::full(deg);
            for (p, want) in primes.iter().zip(degrees) {
                let got = factor_degrees_mod_p(f, *p)
                    .map_err(|e| format!("prime {p} unusable: {e:?}"))?;
                if &got != want {
                    return Err(format!("degrees mod {p}: recorded {want:?}, found {got:?}"));
                }
                inter.intersect(&SubsetSums::of(&got, deg));
            }
            if inter.is_trivial() {
                Ok(())
            } else {
                Err(format!("common subset sums {:?}", inter.values()))
            }
        }
        IrredCertificate::Recombination {
            prime,
            exponent,
            factors,
        } => {
            let p = *prime;
            if !is_prime(p) || p >= fp::MAX_PRIME {
                return Err(format!("{p} is not a usable prime"));
            }
            let d = factor_degrees_mod_p(f, p).map_err(|e| format!("prime {p} unusable: {e:?}"))?;
            if d.len() != *factors {
                return Err(format!("{} factors mod {p}, recorded {factors}", d.len()));
            }
            let (k, _) = hensel::precision(f, p);
            if *exponent < k {
                return Err(format!("exponent {exponent} is below the required {k}"));
            }
            let modulus = BigInt::from(p).pow(*exponent);
            let mut rng = ChaCha8Rng::seed_from_u64(p.wrapping_add(1));
            let local = fp::factor(&fp::reduce_int(f, p), p, &mut rng);
            let lifted = hensel::multifactor_lift(f, &local, p, *exponent);
            match hensel::recombine(f, &lifted, &modulus, lifted.len() / 2) {
                Some(g) => Err(format!("recombination finds factor {g}")),
                None => Ok(()),
            }
        }
    }
}

/// `gcd(f, f')` over `Q` when it has positive degree, which makes it a
/// proper factor of `f`.
fn repeated_factor(f: &IntPoly) -> Option<IntPoly> {
    let mut a = f.primitive_part();
    let mut b = f.derivative().primitive_part();
    while !b.is_zero() {
        let r = pseudo_rem(&a, &b);
        a = std::mem::replace(&mut b, if r.is_zero() { r } else { r.primitive_part() });
    }
    a.degree().is_some_and(|d| d > 0).then_some(a)
}

fn pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.degree().expect("nonzero divisor");
    let lb = b.leading().unwrap().clone();
    let mut r: Vec<BigInt> = a.coeffs().to_vec();
    while r.len() > db && r.iter().any(|c| !c.is_zero()) {
        let top = r.len() - 1;
        let lr = r[top].clone();
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (i, c) in b.coeffs().iter().enumerate() {
            r[top - db + i] -= &lr * c;
        }
        r.pop();
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    IntPoly::new(r)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn primes_up_to(limit: u64) -> Vec<u64> {
    let n = limit as usize;
    let mut sieve = vec![true; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if sieve[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
    }
    out
}

/// `C(n, k) mod p` from the base-`p` digits of `n` and `k` (Lucas).
pub fn lucas_binom_mod_p(mut n: u64, mut k: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while n > 0 || k > 0 {
        let (nd, kd) = (n % p, k % p);
        if kd > nd {
            return 0;
        }
        acc = acc * small_binom_mod(nd, kd, p) % p;
        n /= p;
        k /= p;
    }
    acc
}

fn small_binom_mod(n: u64, k: u64, p: u64) -> u64 {
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..k {
        num = num * ((n - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    num * fp::inv(den, p) % p
}

/// Degrees of the irreducible factors of `f` over `F_p`, sorted.
pub fn factor_degrees_mod_p(f: &IntPoly, p: u64) -> Result<Vec<usize>, Unusable> {
    assert!(is_prime(p) && p < fp::MAX_PRIME, "bad prime {p}");
    let fp_ = fp::reduce_int(f, p);
    if fp_.len() != f.coeffs().len() {
        return Err(Unusable::DividesLeading);
    }
    if !fp::is_squarefree(&fp_, p) {
        return Err(Unusable::NotSquarefree);
    }
    Ok(fp::factor_degrees(&fp_, p))
}

pub fn is_eisenstein(g: &IntPoly, p: u64) -> bool {
    let Some(d) = g.degree() else { return false };
    if d == 0 {
        return false;
    }
    let bp = BigInt::from(p);
    let p2 = &bp * &bp;
    let c = g.coeffs();
    !c[d].is_multiple_of(&bp)
        && c[..d].iter().all(|a| a.is_multiple_of(&bp))
        && !c[0].is_multiple_of(&p2)
}

/// Shifts in search order: `0, −1, 1, −2, 2, …`.
fn shifts(bound: i64) -> Vec<i64> {
    let mut out = vec![0];
    for a in 1..=bound {
        out.push(-a);
        out.push(a);
    }
    out
}

/// `f(t + c) mod m` for a small modulus, by Horner.
fn shift_mod(f: &IntPoly, c: i64, m: u64) -> Vec<u64> {
    let bm = BigInt::from(m);
    let cm = c.rem_euclid(m as i64) as u64;
    let mut acc: Vec<u64> = Vec::with_capacity(f.coeffs().len());
    for a in f.coeffs().iter().rev() {
        let a = a.mod_floor(&bm).to_u64().unwrap();
        // acc <- acc * (t + c) + a
        acc.push(0);
        for i in (1..acc.len()).rev() {
            acc[i] = ((acc[i - 1] as u128 + acc[i] as u128 * cm as u128) % m as u128) as u64;
        }
        acc[0] = ((acc[0] as u128 * cm as u128 + a as u128) % m as u128) as u64;
    }
    acc
}

fn eisenstein_mod(f: &IntPoly, c: i64, p: u64) -> bool {
    // the constant term f(c) decides most probes cheaply
    let fc = f.eval(&BigInt::from(c));
    let bp = BigInt::from(p);
    if !fc.is_multiple_of(&bp) || fc.is_multiple_of(&(&bp * &bp)) {
        return false;
    }
    let g = shift_mod(f, c, p);
    let d = g.len() - 1;
    !g[d].is_multiple_of(p) && g[..d].iter().all(|&a| a.is_multiple_of(p))
}

/// First `(c, p)` in the order `c = 0, −1, 1, …, ±shift_bound` and
/// increasing primes `p ≤ prime_bound` such that `f(t + c)` is Eisenstein
/// at `p`.
pub fn eisenstein_search(
    f: &IntPoly,
    shift_bound: i64,
    prime_bound: u64,
    exec: Exec,
) -> Option<(i64, u64)> {
    let primes = primes_up_to(prime_bound);
    let hit = exec.find_first(shifts(shift_bound), |c| {
        primes
            .iter()
            .find(|&&p| eisenstein_mod(f, c, p))
            .map(|&p| (c, p))
    })?;
    // exact confirmation
    is_eisenstein(&f.shift_compose(&BigInt::from(hit.0)), hit.1).then_some(hit)
}

/// Achievable factor degrees as a bitset over `0..=deg`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct SubsetSums {
    bits: Vec<bool>,
}

impl SubsetSums {
    fn full(deg: usize) -> Self {
        Self {
            bits: vec![true; deg + 1],
        }
    }

    fn of(degrees: &[usize], deg: usize) -> Self {
        let mut bits = vec![false; deg + 1];
        bits[0] = true;
        for &d in degrees {
            for s in (d..=deg).rev() {
                if bits[s - d] {
                    bits[s] = true;
                }
            }
        }
        Self { bits }
    }

    fn intersect(&mut self, other: &Self) {
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a &= *b;
        }
    }

    fn values(&self) -> Vec<usize> {
        (0..self.bits.len()).filter(|&i| self.bits[i]).collect()
    }

    fn is_trivial(&self) -> bool {
        self.values().len() <= 2
    }
}

/// Bounds for [`decide_irreducible`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrredConfig {
    pub shift_bound: i64,
    pub prime_bound: u64,
    /// The sieve may only conclude after this many usable primes.
    pub sieve_min_primes: usize,
    /// Usable primes examined before giving up on the sieve.
    pub sieve_max_primes: usize,
    pub subset_cap: usize,
    /// Largest `log2(p^k)` the Hensel stage will lift to.
    pub max_lift_bits: u64,
    #[serde(skip)]
    pub exec: Exec,
}

impl Default for IrredConfig {
    fn default() -> Self {
        Self {
            shift_bound: 4,
            prime_bound: 97,
            sieve_min_primes: 8,
            sieve_max_primes: 1000,
            subset_cap: 3,
            max_lift_bits: 4096,
            exec: Exec::Parallel,
        }
    }
}

/// A verdict with the evidence log gathered on the way.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decision {
    pub verdict: IrredVerdict,
    pub log: Vec<String>,
}

fn divisors(n: &BigUint, limit: u64) -> Option<Vec<BigUint>> {
    let n = n.to_u64()?;
    if n > limit {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(BigUint::from(d));
            if d * d != n {
                large.push(BigUint::from(n / d));
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

const ROOT_SEARCH_LIMIT: u64 = 1 << 40;

/// A rational root `a/b`, as the primitive linear factor `b·t − a`;
/// `Err` if the candidate set was too large to enumerate.
fn rational_root_factor(f: &IntPoly) -> Result<Option<IntPoly>, String> {
    let c0 = f.coeff(0);
    if c0.is_zero() {
        return Ok(Some(IntPoly::from_i64(&[0, 1])));
    }
    let lc = f.leading().unwrap();
    let nums =
        divisors(&c0.magnitude().clone(), ROOT_SEARCH_LIMIT).ok_or("constant term too large")?;
    let dens = divisors(&lc.magnitude().clone(), ROOT_SEARCH_LIMIT)
        .ok_or("leading coefficient too large")?;
    for b in &dens {
        let b = BigInt::from(b.clone());
        for a in &nums {
            for a in [BigInt::from(a.clone()), -BigInt::from(a.clone())] {
                if !a.gcd(&b).is_one() {
                    continue;
                }
                // b^deg f(a/b) by homogeneous Horner
                let mut acc = BigInt::zero();
                let mut bpow = BigInt::one();
                for c in f.coeffs().iter().rev() {
                    acc = acc * &a + c * &bpow;
                    bpow *= &b;
                }
                if acc.is_zero() {
                    return Ok(Some(IntPoly::new(vec![-a, b.clone()])));
                }
            }
        }
    }
    Ok(None)
}

/// Independent root check by exact rational evaluation, used by the
/// certificate checker.
fn rational_root_by_evaluation(f: &IntPoly) -> Option<BigRational> {
    let c0 = f.coeff(0);
    if c0.is_zero() {
        return Some(BigRational::zero());
    }
    let nums = divisors(c0.magnitude(), ROOT_SEARCH_LIMIT)?;
    let dens = divisors(f.leading().unwrap().magnitude(), ROOT_SEARCH_LIMIT)?;
    for b in &dens {
        for a in &nums {
            for sign in [1, -1] {
                let r = BigRational::new(
                    BigInt::from(sign) * BigInt::from(a.clone()),
                    BigInt::from(b.clone()),
                );
                let v = f.coeffs().iter().rev().fold(BigRational::zero(), |acc, c| {
                    acc * &r + BigRational::from_integer(c.clone())
                });
                if v.is_zero() {
                    return Some(r);
                }
            }
        }
    }
    None
}

pub fn decide_irreducible(f: &IntPoly, cfg: &IrredConfig) -> Result<IrredVerdict, IrredError> {
    decide_irreducible_logged(f, cfg).map(|d| d.verdict)
}

pub fn decide_irreducible_logged(f: &IntPoly, cfg: &IrredConfig) -> Result<Decision, IrredError> {
    let deg = match f.degree() {
        None | Some(0) => return Err(IrredError::Constant),
        Some(d) => d,
    };
    let content = f.content();
    if !content.is_one() {
        return Err(IrredError::NotPrimitive(content));
    }
    let mut log = Vec::new();
    let done = |verdict, log| Ok(Decision { verdict, log });
    let irreducible = |certificate| IrredVerdict::Irreducible { certificate };

    if deg == 1 {
        log.push("degree 1".into());
        return done(irreducible(IrredCertificate::Linear), log);
    }

    // (1) rational roots
    match rational_root_factor(f) {
        Ok(Some(factor)) => {
            log.push(format!("rational root gives factor {factor}"));
            return done(IrredVerdict::Reducible { factor }, log);
        }
        Ok(None) if deg <= 3 => {
            log.push("no rational root and degree at most 3".into());
            return done(irreducible(IrredCertificate::NoRationalRoot), log);
        }
        Ok(None) => log.push("no rational root".into()),
        Err(why) => log.push(format!("rational root search skipped: {why}")),
    }
    if let Some(factor) = repeated_factor(f) {
        log.push(format!("repeated factor {factor}"));
        return done(IrredVerdict::Reducible { factor }, log);
    }

    // (2) Eisenstein after a shift
    if let Some((shift, prime)) = eisenstein_search(f, cfg.shift_bound, cfg.prime_bound, cfg.exec) {
        log.push(format!("f(t{shift:+}) is Eisenstein at {prime}"));
        return done(
            irreducible(IrredCertificate::Eisenstein { shift, prime }),
            log,
        );
    }
    log.push(format!(
        "no Eisenstein certificate with |c| <= {} and p <= {}",
        cfg.shift_bound, cfg.prime_bound
    ));

    // (3) + (4) single irreducible reduction, then the degree sieve
    let mut primes = Vec::new();
    let mut degrees = Vec::new();
    let mut inter = SubsetSums::full(deg);
    let mut best: Option<(u64, Vec<usize>)> = None;
    let chunk = if cfg.exec.is_parallel() { 8 } else { 1 };
    let mut candidates = (2..fp::MAX_PRIME).filter(|&p| is_prime(p));
    'scan: while primes.len() < cfg.sieve_max_primes {
        let batch: Vec<u64> = candidates.by_ref().take(chunk).collect();
        if batch.is_empty() {
            break;
        }
        let results = cfg.exec.map(batch.clone(), |p| factor_degrees_mod_p(f, p));
        for (p, r) in batch.into_iter().zip(results) {
            let d = match r {
                Ok(d) => d,
                Err(why) => {
                    log.push(format!("p={p} unusable ({why:?})"));
                    continue;
                }
            };
            log.push(format!("p={p} degrees {d:?}"));
            if d == vec![deg] {
                return done(irreducible(IrredCertificate::ModP { prime: p }), log);
            }
            inter.intersect(&SubsetSums::of(&d, deg));
            if p % 2 == 1 && best.as_ref().is_none_or(|(_, b)| d.len() < b.len()) {
                best = Some((p, d.clone()));
            }
            primes.push(p);
            degrees.push(d);
            if primes.len() >= cfg.sieve_min_primes && inter.is_trivial() {
                log.push(format!(
                    "sieve collapsed after {} usable primes",
                    primes.len()
                ));
                return done(
                    irreducible(IrredCertificate::Sieve { primes, degrees }),
                    log,
                );
            }
            if primes.len() >= cfg.sieve_max_primes {
                break 'scan;
            }
        }
    }
    log.push(format!(
        "sieve inconclusive after {} usable primes; surviving degrees {:?}",
        primes.len(),
        inter.values()
    ));

    // (5) Hensel lifting and bounded recombination
    if let Some((p, _)) = best {
        let (k, modulus) = hensel::precision(f, p);
        if modulus.bits() > cfg.max_lift_bits {
            log.push(format!(
                "lift to {p}^{k} exceeds {} bits; skipped",
                cfg.max_lift_bits
            ));
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(p);
            let factors = fp::factor(&fp::reduce_int(f, p), p, &mut rng);
            let lifted = hensel::multifactor_lift(f, &factors, p, k);
            let r = lifted.len();
            log.push(format!("lifted {r} factors mod {p}^{k}"));
            if let Some(factor) = hensel::recombine(f, &lifted, &modulus, cfg.subset_cap) {
                log.push(format!("recombination found factor {factor}"));
                return done(IrredVerdict::Reducible { factor }, log);
            }
            log.push(format!(
                "no factor from subsets of size <= {}",
                cfg.subset_cap
            ));
            if r / 2 <= cfg.subset_cap {
                log.push("every subset up to half the factors was tried".into());
                return done(
                    irreducible(IrredCertificate::Recombination {
                        prime: p,
                        exponent: k,
                        factors: r,
                    }),
                    log,
                );
            }
        }
    }

    // (6)
    done(IrredVerdict::Unknown { log: log.clone() }, log)
}
