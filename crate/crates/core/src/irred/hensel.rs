//! Linear Hensel lifting of a mod-`p` factorization and bounded
//! recombination of the lifted factors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::fp;
use crate::laurent::IntPoly;

type ZPoly = Vec<BigInt>;

fn trim(mut a: ZPoly) -> ZPoly {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn lift_u64(a: &[u64]) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn zmod(a: &[BigInt], m: &BigInt) -> ZPoly {
    trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn to_fp(a: &[BigInt], p: u64) -> fp::Poly {
    let m = BigInt::from(p);
    fp::trim(
        a.iter()
            .map(|c| c.mod_floor(&m).to_u64().unwrap())
            .collect(),
    )
}

/// `(s, t)` with `s·g + t·h = 1` over `F_p`, for coprime `g` and `h`.
fn bezout(g: &[u64], h: &[u64], p: u64) -> (fp::Poly, fp::Poly) {
    // invariant: r_i = s_i g + t_i h
    let (mut r0, mut r1) = (g.to_vec(), h.to_vec());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = fp::divrem(&r0, &r1, p);
        let s2 = fp::sub(&s0, &fp::mul(&q, &s1, p), p);
        let t2 = fp::sub(&t0, &fp::mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    assert_eq!(r0.len(), 1, "factors must be coprime mod p");
    let c = fp::inv(r0[0], p);
    let scale = |v: &[u64]| fp::trim(v.iter().map(|&x| x * c % p).collect());
    (scale(&s0), scale(&t0))
}

/// Lifts `f ≡ g·h (mod p)`, `g` monic, to `f ≡ G·H (mod p^k)`.
fn lift_pair(f: &[BigInt], g: &[u64], h: &[u64], p: u64, k: u32) -> (ZPoly, ZPoly) {
    let (s, t) = bezout(g, h, p);
    let bp = BigInt::from(p);
    let mut big_g = lift_u64(g);
    let mut big_h = lift_u64(h);
    let mut pj = bp.clone();
    for _ in 1..k {
        let prod = zmul(&big_g, &big_h);
        let n = f.len().max(prod.len());
        let diff: ZPoly = (0..n)
            .map(|i| {
                let a = f.get(i).cloned().unwrap_or_default();
                let b = prod.get(i).cloned().unwrap_or_default();
                a - b
            })
            .collect();
        let e: ZPoly = diff.iter().map(|c| c / &pj).collect();
        let e = to_fp(&e, p);
        let (q, b) = fp::divrem(&fp::mul(&t, &e, p), g, p);
        let a = fp::add(&fp::mul(&s, &e, p), &fp::mul(&q, h, p), p);
        for (i, c) in b.iter().enumerate() {
            if i >= big_g.len() {
                big_g.resize(i + 1, BigInt::zero());
            }
            big_g[i] += &pj * BigInt::from(*c);
        }
        for (i, c) in a.iter().enumerate() {
            if i >= big_h.len() {
                big_h.resize(i + 1, BigInt::zero());
            }
            big_h[i] += &pj * BigInt::from(*c);
        }
        pj *= &bp;
    }
    (zmod(&big_g, &pj), zmod(&big_h, &pj))
}

/// Lifts the monic factorization `f ≡ lc(f)·∏ g_i (mod p)` to monic
/// factors modulo `p^k`.
pub fn multifactor_lift(f: &IntPoly, factors: &[fp::Poly], p: u64, k: u32) -> Vec<ZPoly> {
    let modulus = BigInt::from(p).pow(k);
    let mut rest: ZPoly = zmod(f.coeffs(), &modulus);
    let mut out = Vec::with_capacity(factors.len());
    for (i, g) in factors.iter().enumerate() {
        if i + 1 == factors.len() {
            // the remaining cofactor is lc·g; make it monic mod p^k
            let lc = rest.last().cloned().unwrap();
            let inv = mod_inverse(&lc, &modulus).expect("leading coefficient is a unit mod p");
            let scaled: ZPoly = rest.iter().map(|c| c * &inv).collect();
            out.push(zmod(&scaled, &modulus));
            break;
        }
        let lc_rest = *to_fp(&rest, p).last().unwrap();
        let h = factors[i + 1..]
            .iter()
            .fold(vec![lc_rest], |acc, o| fp::mul(&acc, o, p));
        let (big_g, big_h) = lift_pair(&rest, g, &h, p, k);
        out.push(big_g);
        rest = big_h;
    }
    out
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

fn symmetric(a: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m / 2;
    trim(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

/// Tries every product of at most `cap` lifted factors as a true factor of
/// `f`; returns the first one that divides exactly.
pub fn recombine(f: &IntPoly, lifted: &[ZPoly], modulus: &BigInt, cap: usize) -> Option<IntPoly> {
    let r = lifted.len();
    let lc = f.leading().cloned().unwrap();
    let deg = f.degree().unwrap_or(0);
    for size in 1..=cap.min(r.saturating_sub(1)) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let mut cand = vec![lc.clone()];
            for &i in &idx {
                cand = zmod(&zmul(&cand, &lifted[i]), modulus);
            }
            let g = IntPoly::new(symmetric(&cand, modulus)).primitive_part();
            if g.degree().is_some_and(|d| d > 0 && d < deg) && f.div_exact(&g).is_some() {
                return Some(g);
            }
            if !next_combination(&mut idx, r) {
                break;
            }
        }
    }
    None
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for pos in (0..k).rev() {
        if idx[pos] < n - k + pos {
            idx[pos] += 1;
            for j in pos + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Smallest `k` with `p^k > 2·|lc(f)|·2^deg·‖f‖₂`, enough to recover any
/// factor of `f` from its image mod `p^k`.
pub fn precision(f: &IntPoly, p: u64) -> (u32, BigInt) {
    let deg = f.degree().unwrap_or(0);
    let bound: BigInt =
        BigInt::from(2) * f.leading().unwrap().abs() * (BigInt::one() << deg) * f.norm2_ceil();
    let bp = BigInt::from(p);
    let mut k = 1;
    let mut m = bp.clone();
    while m <= bound {
        m *= &bp;
        k += 1;
    }
    (k, m)
}
