//! Dense polynomials over a prime field `F_p`, coefficients low to high.
//!
//! Products are accumulated in `u64` before reduction, which is exact for
//! `p < 2^20` and degrees far beyond anything used here.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

use crate::laurent::IntPoly;

pub const MAX_PRIME: u64 = 1 << 20;

pub type Poly = Vec<u64>;

pub fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn reduce_int(f: &IntPoly, p: u64) -> Poly {
    let m = BigInt::from(p);
    trim(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = c % &m;
                let r = if r < BigInt::zero() { r + &m } else { r };
                r.to_u64().unwrap()
            })
            .collect(),
    )
}

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub fn inv(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

pub fn monic(a: &[u64], p: u64) -> Poly {
    match a.last() {
        None => Vec::new(),
        Some(&lc) => {
            let s = inv(lc, p);
            a.iter().map(|&c| c * s % p).collect()
        }
    }
}

pub fn add(a: &[u64], b: &[u64], p: u64) -> Poly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

pub fn sub(a: &[u64], b: &[u64], p: u64) -> Poly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect(),
    )
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut acc = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (slot, &y) in acc[i..].iter_mut().zip(b) {
            *slot += x * y;
        }
    }
    trim(acc.into_iter().map(|c| c % p).collect())
}

pub fn derivative(a: &[u64], p: u64) -> Poly {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| (i as u64 % p) * c % p)
            .collect(),
    )
}

/// Reduces `a` modulo a monic `m` in place; cost is proportional to the
/// number of nonzero terms of `m`.
fn reduce_monic(a: &mut Poly, m: &[u64], m_terms: &[(usize, u64)], p: u64) {
    let dm = m.len() - 1;
    while a.len() > dm {
        let top = a.len() - 1;
        let c = a[top];
        if c != 0 {
            let base = top - dm;
            for &(j, mj) in m_terms {
                a[base + j] = (a[base + j] + (p - c) * mj) % p;
            }
        }
        a.pop();
    }
    let t = std::mem::take(a);
    *a = trim(t);
}

fn terms_below_top(m: &[u64]) -> Vec<(usize, u64)> {
    m[..m.len() - 1]
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(j, &c)| (j, c))
        .collect()
}

/// `a mod m` for any nonzero `m`.
pub fn rem(a: &[u64], m: &[u64], p: u64) -> Poly {
    let mm = monic(m, p);
    let terms = terms_below_top(&mm);
    let mut r = a.to_vec();
    reduce_monic(&mut r, &mm, &terms, p);
    r
}

/// Quotient and remainder of `a` by a nonzero `m`.
pub fn divrem(a: &[u64], m: &[u64], p: u64) -> (Poly, Poly) {
    let dm = m.len() - 1;
    let li = inv(*m.last().unwrap(), p);
    let mut r = a.to_vec();
    if r.len() <= dm {
        return (Vec::new(), trim(r));
    }
    let mut q = vec![0u64; r.len() - dm];
    while r.len() > dm {
        let top = r.len() - 1;
        let c = r[top] * li % p;
        let base = top - dm;
        q[base] = c;
        if c != 0 {
            for (j, &mj) in m.iter().enumerate() {
                r[base + j] = (r[base + j] + (p - c) * mj) % p;
            }
        }
        r.pop();
    }
    (trim(q), trim(r))
}

/// Monic gcd; `gcd(0, 0) = 0`.
pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Poly {
    let mut x = monic(&trim(a.to_vec()), p);
    let mut y = monic(&trim(b.to_vec()), p);
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = monic(&r, p);
    }
    x
}

pub fn mul_mod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Poly {
    rem(&mul(a, b, p), m, p)
}

/// `a^e mod m` with a big exponent.
pub fn pow_poly_mod(a: &[u64], e: &BigUint, m: &[u64], p: u64) -> Poly {
    let mut acc = rem(&[1], m, p);
    let base = rem(a, m, p);
    for i in (0..e.bits()).rev() {
        acc = mul_mod(&acc, &acc, m, p);
        if e.bit(i) {
            acc = mul_mod(&acc, &base, m, p);
        }
    }
    acc
}

/// Squarefree mod `p` (and of full degree), via `gcd(f, f') = 1`.
pub fn is_squarefree(f: &[u64], p: u64) -> bool {
    let d = derivative(f, p);
    !d.is_empty() && gcd(f, &d, p).len() == 1
}

/// Matrix of the Frobenius `h ↦ h^p` modulo a monic `f`: row `j` is
/// `x^{pj} mod f`.
struct Frobenius {
    rows: Vec<Poly>,
    p: u64,
}

impl Frobenius {
    fn new(f: &[u64], p: u64) -> Self {
        let d = f.len() - 1;
        let terms = terms_below_top(f);
        // multiply by x^p either as a shift followed by sparse reduction or
        // as a dense product, whichever is cheaper
        let by_shift = (p as usize) * (terms.len() + 1) < d * d;
        let xp = (!by_shift).then(|| pow_poly_mod(&[0, 1], &BigUint::from(p), f, p));
        let mut rows: Vec<Poly> = Vec::with_capacity(d);
        rows.push(vec![1]);
        for j in 1..d {
            let prev = &rows[j - 1];
            let mut v = match &xp {
                None => {
                    let mut v = vec![0u64; p as usize];
                    v.extend_from_slice(prev);
                    v
                }
                Some(xp) => mul(prev, xp, p),
            };
            reduce_monic(&mut v, f, &terms, p);
            rows.push(v);
        }
        Self { rows, p }
    }

    fn apply(&self, h: &[u64]) -> Poly {
        let d = self.rows.len();
        let mut acc = vec![0u64; d];
        for (&c, row) in h.iter().zip(&self.rows) {
            if c == 0 {
                continue;
            }
            for (slot, &r) in acc.iter_mut().zip(row) {
                *slot += c * r;
            }
        }
        trim(acc.into_iter().map(|c| c % self.p).collect())
    }
}

/// Distinct-degree factorization of a monic squarefree `f`: pairs
/// `(g_d, d)` where `g_d` is the product of the irreducible factors of
/// degree `d`.
pub fn ddf(f: &[u64], p: u64) -> Vec<(Poly, usize)> {
    let f = monic(f, p);
    let mut out = Vec::new();
    if f.len() <= 1 {
        return out;
    }
    let frob = Frobenius::new(&f, p);
    let x = rem(&[0, 1], &f, p);
    let mut h = x.clone();
    let mut cur = f.clone();
    let mut i = 0;
    loop {
        let dc = cur.len() - 1;
        if 2 * (i + 1) > dc {
            break;
        }
        i += 1;
        h = frob.apply(&h);
        let g = gcd(&cur, &sub(&h, &x, p), p);
        if g.len() > 1 {
            cur = divrem(&cur, &g, p).0;
            out.push((g, i));
        }
    }
    if cur.len() > 1 {
        let d = cur.len() - 1;
        out.push((cur, d));
    }
    out
}

/// Degrees of the irreducible factors of a monic squarefree `f`, sorted.
pub fn factor_degrees(f: &[u64], p: u64) -> Vec<usize> {
    let mut out = Vec::new();
    for (g, d) in ddf(f, p) {
        out.extend(std::iter::repeat_n(d, (g.len() - 1) / d));
    }
    out.sort_unstable();
    out
}

/// Splits a monic product of irreducibles of degree `d` into its factors
/// (Cantor–Zassenhaus, odd `p`).
pub fn edf<R: Rng>(g: &[u64], d: usize, p: u64, rng: &mut R) -> Vec<Poly> {
    assert!(p % 2 == 1, "equal-degree splitting needs an odd prime");
    let n = g.len() - 1;
    if n == d {
        return vec![g.to_vec()];
    }
    let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
    loop {
        let a: Poly = trim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.len() <= 1 {
            continue;
        }
        let b = pow_poly_mod(&a, &e, g, p);
        let b1 = sub(&b, &[1], p);
        let h = gcd(g, &b1, p);
        if h.len() > 1 && h.len() < g.len() {
            let other = divrem(g, &h, p).0;
            let mut out = edf(&h, d, p, rng);
            out.extend(edf(&monic(&other, p), d, p, rng));
            return out;
        }
    }
}

/// Monic irreducible factors of a monic squarefree `f`, sorted.
pub fn factor<R: Rng>(f: &[u64], p: u64, rng: &mut R) -> Vec<Poly> {
    let mut out = Vec::new();
    for (g, d) in ddf(f, p) {
        out.extend(edf(&g, d, p, rng));
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn arithmetic() {
        let p = 7;
        let a = vec![1, 2, 3];
        let b = vec![6, 1];
        let (q, r) = divrem(&mul(&a, &b, p), &b, p);
        assert_eq!(q, a);
        assert!(r.is_empty());
        assert_eq!(gcd(&mul(&a, &b, p), &mul(&b, &b, p), p), b);
        assert_eq!(inv(3, 7), 5);
    }

    #[test]
    fn ddf_small() {
        // (x^2+1)(x+1)(x+2) mod 3
        let p = 3;
        let f = mul(&mul(&[1, 0, 1], &[1, 1], p), &[2, 1], p);
        assert!(is_squarefree(&f, p));
        assert_eq!(factor_degrees(&f, p), vec![1, 1, 2]);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let fs = factor(&f, p, &mut rng);
        assert_eq!(fs, vec![vec![1, 0, 1], vec![1, 1], vec![2, 1]]);
    }

    #[test]
    fn frobenius_matches_powering() {
        let p = 11;
        let f = monic(&[3, 0, 5, 1, 0, 0, 2, 1], p);
        let frob = Frobenius::new(&f, p);
        let h = vec![4, 7, 1, 0, 9];
        let want = pow_poly_mod(&h, &BigUint::from(p), &f, p);
        assert_eq!(frob.apply(&h), want);
    }
}
