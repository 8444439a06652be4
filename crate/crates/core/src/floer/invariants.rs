use std::collections::HashMap;

use num_rational::Rational64;
use serde::Serialize;

use super::linalg::{kernel_and_image, BitVec, Span};
use super::{Complex, FloerError};

/// Elements `U^n·x` in one Maslov grading that belong to a given set.
struct Slice {
    elems: Vec<(usize, i64)>,
    index: HashMap<(usize, i64), usize>,
}

impl Slice {
    fn new(c: &Complex, grading: i64, member: &dyn Fn(usize, i64) -> bool) -> Self {
        let mut elems = Vec::new();
        for (x, g) in c.generators().iter().enumerate() {
            let diff = g.maslov - grading;
            if diff.rem_euclid(2) == 0 && member(x, diff / 2) {
                elems.push((x, diff / 2));
            }
        }
        let index = elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        Self { elems, index }
    }

    fn len(&self) -> usize {
        self.elems.len()
    }

    fn vector(&self, items: impl IntoIterator<Item = (usize, i64)>) -> BitVec {
        let mut v = BitVec::zeros(self.len());
        for e in items {
            if let Some(&i) = self.index.get(&e) {
                v.flip(i);
            }
        }
        v
    }
}

/// A subquotient of `CFK^∞` cut out by a membership predicate on `(x, n)`.
/// The predicate must describe a set closed under the differential modulo
/// its complement (a quotient of a subcomplex), which holds for the windows
/// used here.
struct Truncated<'a> {
    c: &'a Complex,
    member: Box<dyn Fn(usize, i64) -> bool + 'a>,
}

impl<'a> Truncated<'a> {
    fn slice(&self, g: i64) -> Slice {
        Slice::new(self.c, g, &*self.member)
    }

    /// Boundaries of every element of `from` expressed in `to`.
    fn boundary(&self, from: &Slice, to: &Slice) -> Vec<BitVec> {
        from.elems
            .iter()
            .map(|&(x, n)| to.vector(self.c.out(x).iter().map(|&(y, u)| (y, n + u as i64))))
            .collect()
    }

    /// Cycles at grading `g` and the span of boundaries there.
    fn homology(&self, g: i64) -> (Slice, Vec<BitVec>, Span) {
        let here = self.slice(g);
        let below = self.slice(g - 1);
        let above = self.slice(g + 1);
        let (cycles, _) = kernel_and_image(&self.boundary(&here, &below));
        let (_, bounds) = kernel_and_image(&self.boundary(&above, &here));
        (here, cycles, bounds)
    }

    fn apply_u(&self, v: &BitVec, from: &Slice, to: &Slice) -> BitVec {
        to.vector(v.ones().map(|i| {
            let (x, n) = from.elems[i];
            (x, n + 1)
        }))
    }

    /// Grading of the bottom of the `U`-tower: start from the unique class in
    /// grading `g_high` and apply `U` until it dies.
    fn tower_bottom(&self, g_high: i64, floor: i64) -> Result<i64, FloerError> {
        let (top, cycles, bounds) = self.homology(g_high);
        let classes: Vec<&BitVec> = cycles.iter().filter(|z| !bounds.contains(z)).collect();
        if cycles.len() - bounds.dim() != 1 {
            return Err(FloerError::Tower(g_high));
        }
        let mut xi = classes[0].clone();
        let mut slice = top;
        let mut g = g_high;
        while g > floor {
            let next = self.slice(g - 2);
            let image = self.apply_u(&xi, &slice, &next);
            let (_, _, b) = self.homology(g - 2);
            if b.contains(&image) {
                return Ok(g);
            }
            xi = image;
            slice = next;
            g -= 2;
        }
        Err(FloerError::Tower(g))
    }
}

fn even_at_least(x: i64) -> i64 {
    x + x.rem_euclid(2)
}

fn max_maslov(c: &Complex) -> i64 {
    c.generators().iter().map(|g| g.maslov).max().unwrap_or(0)
}

fn min_maslov(c: &Complex) -> i64 {
    c.generators().iter().map(|g| g.maslov).min().unwrap_or(0)
}

fn window(c: &Complex, k_max: i64) -> i64 {
    c.max_abs_alexander() + c.max_abs_maslov() + k_max + 4
}

fn vk_with_window(c: &Complex, k: i64, big_n: i64) -> Result<u64, FloerError> {
    let alex: Vec<i64> = c.generators().iter().map(|g| g.alexander).collect();
    let a_plus = Truncated {
        c,
        member: Box::new(move |x, n| n >= -big_n && n <= 0.max(alex[x] - k)),
    };
    let b_plus = Truncated {
        c,
        member: Box::new(move |_, n| n >= -big_n && n <= 0),
    };
    let g_high = even_at_least(max_maslov(c) + 1);
    let floor = min_maslov(c) - 2 * (c.max_abs_alexander() + 2) - 2;
    let bottom_a = a_plus.tower_bottom(g_high, floor)?;
    let bottom_b = b_plus.tower_bottom(g_high, floor)?;
    let diff = bottom_b - bottom_a;
    if diff < 0 || diff % 2 != 0 {
        return Err(FloerError::Tower(bottom_a));
    }
    Ok((diff / 2) as u64)
}

/// `V_0, …, V_{k_max}` from the quotient complexes
/// `A_k^+ = C{max(i, j − k) ≥ 0}` and `B^+ = C{i ≥ 0}`, each truncated to
/// `n ≥ −N`. The answer is recomputed with `N + 1` and must agree.
pub fn compute_vk(c: &Complex, k_max: u32) -> Result<Vec<u64>, FloerError> {
    let big_n = window(c, k_max as i64);
    (0..=k_max as i64)
        .map(|k| {
            let v = vk_with_window(c, k, big_n)?;
            if vk_with_window(c, k, big_n + 1)? != v {
                return Err(FloerError::NonStabilizing(big_n, big_n + 1));
            }
            Ok(v)
        })
        .collect()
}

/// First `k` with `V_k = 0`.
pub fn nu_plus(c: &Complex) -> Result<u64, FloerError> {
    let k_max = c.max_abs_alexander().max(0) as u32 + 1;
    let v = compute_vk(c, k_max)?;
    Ok(v.iter()
        .position(|&x| x == 0)
        .expect("V_k vanishes past the top Alexander grading") as u64)
}

/// Least Alexander level `s` at which the sublevel complex of the hat
/// complex (`u = 0` part) carries the generator of its homology.
pub fn tau(c: &Complex) -> i64 {
    let n = c.len();
    let images: Vec<BitVec> = (0..n)
        .map(|x| {
            let mut v = BitVec::zeros(n);
            for &(y, u) in c.out(x) {
                if u == 0 {
                    v.flip(y);
                }
            }
            v
        })
        .collect();
    let (_, bounds) = kernel_and_image(&images);
    let mut levels: Vec<i64> = c.generators().iter().map(|g| g.alexander).collect();
    levels.sort_unstable();
    levels.dedup();
    for s in levels {
        let inside: Vec<usize> = (0..n)
            .filter(|&x| c.generators()[x].alexander <= s)
            .collect();
        let sub: Vec<BitVec> = inside.iter().map(|&x| images[x].clone()).collect();
        let (cycles, _) = kernel_and_image(&sub);
        for z in cycles {
            let mut v = BitVec::zeros(n);
            for i in z.ones() {
                v.flip(inside[i]);
            }
            if !bounds.contains(&v) {
                return s;
            }
        }
    }
    unreachable!("hat homology of a knot-like complex is nonzero")
}

/// `Υ(t)` for `t ∈ [0, 2]`: with `F_t(U^n x) = (t/2)·A(x) − n`, it is `−2`
/// times the least level `s` such that some cycle of grading 0 supported in
/// `F_t ≤ s` is nonzero in `H_0(CFK^∞)`. The grading-0 slice is finite, so
/// no window is needed.
pub fn upsilon(c: &Complex, t: Rational64) -> Result<Rational64, FloerError> {
    if t < Rational64::from_integer(0) || t > Rational64::from_integer(2) {
        return Err(FloerError::Input(format!("t = {t} is outside [0, 2]")));
    }
    let all = Truncated {
        c,
        member: Box::new(|_, _| true),
    };
    let (slice, _, bounds) = all.homology(0);
    let level = |i: usize| {
        let (x, n) = slice.elems[i];
        t / 2 * c.generators()[x].alexander - n
    };
    let mut levels: Vec<Rational64> = (0..slice.len()).map(level).collect();
    levels.sort();
    levels.dedup();
    let below = all.slice(-1);
    let d = all.boundary(&slice, &below);
    for s in levels {
        let inside: Vec<usize> = (0..slice.len()).filter(|&i| level(i) <= s).collect();
        let sub: Vec<BitVec> = inside.iter().map(|&i| d[i].clone()).collect();
        let (cycles, _) = kernel_and_image(&sub);
        for z in cycles {
            let mut v = BitVec::zeros(slice.len());
            for i in z.ones() {
                v.flip(inside[i]);
            }
            if !bounds.contains(&v) {
                return Ok(-s * 2);
            }
        }
    }
    Err(FloerError::TowerGrading)
}

/// The `U^0` part of the differential (the complex `C{i = 0}` with the
/// Alexander filtration forgotten) has its homology in Maslov grading 0.
pub(super) fn tower_at_zero(c: &Complex) -> bool {
    let gens = c.generators();
    let in_grading =
        |g: i64| -> Vec<usize> { (0..c.len()).filter(|&x| gens[x].maslov == g).collect() };
    let images = |from: &[usize], to: &[usize]| -> Vec<BitVec> {
        from.iter()
            .map(|&x| {
                let mut v = BitVec::zeros(to.len());
                for &(y, u) in c.out(x) {
                    if let (0, Some(i)) = (u, to.iter().position(|&z| z == y)) {
                        v.flip(i);
                    }
                }
                v
            })
            .collect()
    };
    let (here, below, above) = (in_grading(0), in_grading(-1), in_grading(1));
    let (cycles, _) = kernel_and_image(&images(&here, &below));
    let (_, bounds) = kernel_and_image(&images(&above, &here));
    cycles.len() > bounds.dim()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    #[serde(rename = "V")]
    pub v: Vec<u64>,
    pub nu_plus: u64,
    pub tau: i64,
    /// `(t, Υ(t))` pairs rendered as fractions.
    pub upsilon: Vec<(String, String)>,
}

/// Invariants with `V_0..V_{k_max}` and `Υ` sampled at the given points.
pub fn report(
    c: &Complex,
    k_max: u32,
    samples: &[Rational64],
) -> Result<InvariantReport, FloerError> {
    let upsilon = samples
        .iter()
        .map(|&t| Ok((t.to_string(), upsilon(c, t)?.to_string())))
        .collect::<Result<_, FloerError>>()?;
    Ok(InvariantReport {
        v: compute_vk(c, k_max)?,
        nu_plus: nu_plus(c)?,
        tau: tau(c),
        upsilon,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::floer::{figure_eight_model, mirror, staircase, tensor, trefoil, unknot};

    fn r(a: i64, b: i64) -> Rational64 {
        Rational64::new(a, b)
    }

    #[test]
    fn unknot_values() {
        let u = unknot();
        assert_eq!(compute_vk(&u, 3).unwrap(), vec![0; 4]);
        assert_eq!(nu_plus(&u).unwrap(), 0);
        assert_eq!(tau(&u), 0);
        assert_eq!(upsilon(&u, r(1, 2)).unwrap(), r(0, 1));
    }

    #[test]
    fn trefoil_values() {
        let t = trefoil();
        assert_eq!(compute_vk(&t, 2).unwrap(), vec![1, 0, 0]);
        assert_eq!(nu_plus(&t).unwrap(), 1);
        assert_eq!(tau(&t), 1);
        assert_eq!(upsilon(&t, r(1, 2)).unwrap(), r(-1, 2));
        for j in 0..=4 {
            assert_eq!(upsilon(&t, r(j, 4)).unwrap(), -r(j, 4));
        }
        let m = mirror(&t);
        assert_eq!(compute_vk(&m, 2).unwrap(), vec![0, 0, 0]);
        assert_eq!(tau(&m), -1);
        assert_eq!(upsilon(&m, r(1, 2)).unwrap(), r(1, 2));
    }

    #[test]
    fn figure_eight_values() {
        let f = figure_eight_model();
        assert_eq!(compute_vk(&f, 2).unwrap(), vec![0, 0, 0]);
        assert_eq!(nu_plus(&f).unwrap(), 0);
        assert_eq!(tau(&f), 0);
        for t in [r(1, 4), r(1, 2), r(1, 1), r(3, 2)] {
            assert_eq!(upsilon(&f, t).unwrap(), r(0, 1));
        }
    }

    #[test]
    fn torus_knot_staircases() {
        let t25 = staircase(&[1, 1, 1, 1]);
        assert_eq!(compute_vk(&t25, 2).unwrap(), vec![1, 1, 0]);
        assert_eq!(tau(&t25), 2);
        assert_eq!(upsilon(&t25, r(1, 1)).unwrap(), r(-2, 1));
        let t34 = staircase(&[1, 2, 2, 1]);
        assert_eq!(compute_vk(&t34, 3).unwrap(), vec![1, 1, 1, 0]);
        assert_eq!(tau(&t34), 3);
        assert_eq!(upsilon(&t34, r(1, 1)).unwrap(), r(-2, 1));
    }

    #[test]
    fn slice_sum_vanishes() {
        let t = trefoil();
        let s = tensor(&t, &mirror(&t));
        assert_eq!(s.len(), 9);
        assert_eq!(compute_vk(&s, 2).unwrap(), vec![0, 0, 0]);
        assert_eq!(tau(&s), 0);
    }
}
