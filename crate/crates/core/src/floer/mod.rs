//! Finite models of the knot Floer complex `CFK^∞` over `F_2[U, U^{-1}]`.
//!
//! A complex is given by generators with Maslov grading `M` and Alexander
//! grading `A`, and differential entries `x → y` with a `U`-power `u`,
//! meaning `∂x` contains `U^u·y`. The element `U^n·x` sits at filtration
//! `(i, j) = (−n, A(x) − n)` and Maslov grading `M(x) − 2n`.

mod invariants;
pub mod linalg;
mod models;

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

pub use invariants::{compute_vk, nu_plus, report, tau, upsilon, InvariantReport};
pub use models::{figure_eight_model, staircase, trefoil, unknot};
pub use num_rational::Rational64;

use linalg::{kernel_and_image, BitVec};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FloerError {
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("duplicate generator {0:?}")]
    DuplicateGenerator(String),
    #[error("complex has no generators")]
    Empty,
    #[error("grading: {from} -> U^{u} {to} needs M({to}) - 2u = M({from}) - 1")]
    Grading { from: String, to: String, u: u32 },
    #[error("filtration: {from} -> U^{u} {to} raises the Alexander filtration")]
    Filtration { from: String, to: String, u: u32 },
    #[error("d^2 != 0: coefficient of U^{u} {to} in d^2({from}) is 1")]
    DSquared { from: String, to: String, u: u32 },
    #[error("homology with U = 1 has rank {0}, expected 1")]
    NotKnotLike(usize),
    #[error("the tower of H(CFK^inf) is not normalized at Maslov grading 0")]
    TowerGrading,
    #[error("invariant did not stabilize when the window grew from {0} to {1}")]
    NonStabilizing(i64, i64),
    #[error("tower check failed at grading {0}")]
    Tower(i64),
    #[error("bad input: {0}")]
    Input(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawGenerator {
    pub name: String,
    #[serde(rename = "M")]
    pub maslov: i64,
    #[serde(rename = "A")]
    pub alexander: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawArrow {
    pub from: String,
    pub to: String,
    pub u: u32,
}

/// Complex data as read from JSON, before validation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawComplex {
    pub generators: Vec<RawGenerator>,
    pub differential: Vec<RawArrow>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub maslov: i64,
    pub alexander: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Arrow {
    pub from: usize,
    pub to: usize,
    pub u: u32,
}

/// A validated complex. Arrows are reduced mod 2 and sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Complex {
    gens: Vec<Generator>,
    arrows: Vec<Arrow>,
    out: Vec<Vec<(usize, u32)>>,
}

fn reduce_mod2(arrows: impl IntoIterator<Item = Arrow>) -> Vec<Arrow> {
    let mut count: BTreeMap<Arrow, usize> = BTreeMap::new();
    for a in arrows {
        *count.entry(a).or_default() += 1;
    }
    count
        .into_iter()
        .filter(|(_, c)| c % 2 == 1)
        .map(|(a, _)| a)
        .collect()
}

impl Complex {
    fn assemble(gens: Vec<Generator>, arrows: Vec<Arrow>) -> Self {
        let arrows = reduce_mod2(arrows);
        let mut out = vec![Vec::new(); gens.len()];
        for a in &arrows {
            out[a.from].push((a.to, a.u));
        }
        Self { gens, arrows, out }
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub(crate) fn out(&self, x: usize) -> &[(usize, u32)] {
        &self.out[x]
    }

    pub fn max_abs_alexander(&self) -> i64 {
        self.gens
            .iter()
            .map(|g| g.alexander.abs())
            .max()
            .unwrap_or(0)
    }

    pub fn max_abs_maslov(&self) -> i64 {
        self.gens.iter().map(|g| g.maslov.abs()).max().unwrap_or(0)
    }

    pub fn top_alexander(&self) -> i64 {
        self.gens.iter().map(|g| g.alexander).max().unwrap_or(0)
    }

    pub fn to_raw(&self) -> RawComplex {
        RawComplex {
            generators: self
                .gens
                .iter()
                .map(|g| RawGenerator {
                    name: g.name.clone(),
                    maslov: g.maslov,
                    alexander: g.alexander,
                })
                .collect(),
            differential: self
                .arrows
                .iter()
                .map(|a| RawArrow {
                    from: self.gens[a.from].name.clone(),
                    to: self.gens[a.to].name.clone(),
                    u: a.u,
                })
                .collect(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self, FloerError> {
        let raw: RawComplex =
            serde_json::from_str(text).map_err(|e| FloerError::Input(e.to_string()))?;
        validate_complex(&raw)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_raw()).expect("complex serializes")
    }

    /// Differential with `U = 1`, as images of each generator.
    fn localized_images(&self) -> Vec<BitVec> {
        let n = self.len();
        (0..n)
            .map(|x| {
                let mut v = BitVec::zeros(n);
                for &(y, _) in self.out(x) {
                    v.flip(y);
                }
                v
            })
            .collect()
    }

    /// Rank of homology of the complex with `U` set to 1.
    pub fn localized_rank(&self) -> usize {
        let (ker, im) = kernel_and_image(&self.localized_images());
        ker.len() - im.dim()
    }
}

pub fn validate_complex(raw: &RawComplex) -> Result<Complex, FloerError> {
    if raw.generators.is_empty() {
        return Err(FloerError::Empty);
    }
    let mut index = HashMap::new();
    let mut gens = Vec::new();
    for g in &raw.generators {
        if index.insert(g.name.clone(), gens.len()).is_some() {
            return Err(FloerError::DuplicateGenerator(g.name.clone()));
        }
        gens.push(Generator {
            name: g.name.clone(),
            maslov: g.maslov,
            alexander: g.alexander,
        });
    }
    let lookup = |name: &str| {
        index
            .get(name)
            .copied()
            .ok_or_else(|| FloerError::UnknownGenerator(name.to_string()))
    };
    let mut arrows = Vec::new();
    for a in &raw.differential {
        arrows.push(Arrow {
            from: lookup(&a.from)?,
            to: lookup(&a.to)?,
            u: a.u,
        });
    }
    let c = Complex::assemble(gens, arrows);
    check_d_squared(&c)?;
    let name = |i: usize| c.gens[i].name.clone();
    for a in &c.arrows {
        let (x, y) = (&c.gens[a.from], &c.gens[a.to]);
        if y.maslov - 2 * a.u as i64 != x.maslov - 1 {
            return Err(FloerError::Grading {
                from: name(a.from),
                to: name(a.to),
                u: a.u,
            });
        }
        // j(U^u y) = A(y) - u must not exceed j(x) = A(x)
        if a.u as i64 + x.alexander - y.alexander < 0 {
            return Err(FloerError::Filtration {
                from: name(a.from),
                to: name(a.to),
                u: a.u,
            });
        }
    }
    let rank = c.localized_rank();
    if rank != 1 {
        return Err(FloerError::NotKnotLike(rank));
    }
    if !invariants::tower_at_zero(&c) {
        return Err(FloerError::TowerGrading);
    }
    Ok(c)
}

fn check_d_squared(c: &Complex) -> Result<(), FloerError> {
    for x in 0..c.len() {
        let mut acc: BTreeMap<(usize, u32), bool> = BTreeMap::new();
        for &(y, u1) in c.out(x) {
            for &(z, u2) in c.out(y) {
                let e = acc.entry((z, u1 + u2)).or_default();
                *e = !*e;
            }
        }
        if let Some(((z, u), _)) = acc.into_iter().find(|(_, odd)| *odd) {
            return Err(FloerError::DSquared {
                from: c.gens[x].name.clone(),
                to: c.gens[z].name.clone(),
                u,
            });
        }
    }
    Ok(())
}

/// The dual complex, modelling the mirror knot: gradings negated and every
/// arrow reversed with the same `U`-power.
pub fn mirror(c: &Complex) -> Complex {
    let gens = c
        .gens
        .iter()
        .map(|g| Generator {
            name: mirror_name(&g.name),
            maslov: -g.maslov,
            alexander: -g.alexander,
        })
        .collect();
    let arrows = c
        .arrows
        .iter()
        .map(|a| Arrow {
            from: a.to,
            to: a.from,
            u: a.u,
        })
        .collect();
    Complex::assemble(gens, arrows)
}

fn mirror_name(n: &str) -> String {
    match n.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{n}*"),
    }
}

/// Tensor product over `F_2[U, U^{-1}]`, modelling connected sum.
pub fn tensor(a: &Complex, b: &Complex) -> Complex {
    let nb = b.len();
    let idx = |i: usize, j: usize| i * nb + j;
    let mut gens = Vec::with_capacity(a.len() * nb);
    for x in &a.gens {
        for y in &b.gens {
            gens.push(Generator {
                name: format!("{}|{}", x.name, y.name),
                maslov: x.maslov + y.maslov,
                alexander: x.alexander + y.alexander,
            });
        }
    }
    let mut arrows = Vec::new();
    for i in 0..a.len() {
        for j in 0..nb {
            for &(k, u) in a.out(i) {
                arrows.push(Arrow {
                    from: idx(i, j),
                    to: idx(k, j),
                    u,
                });
            }
            for &(l, u) in b.out(j) {
                arrows.push(Arrow {
                    from: idx(i, j),
                    to: idx(i, l),
                    u,
                });
            }
        }
    }
    Complex::assemble(gens, arrows)
}

/// Graded isomorphism test up to renaming generators (brute force over
/// grading-preserving bijections; for small complexes only).
pub fn isomorphic(a: &Complex, b: &Complex) -> bool {
    if a.len() != b.len() || a.arrows.len() != b.arrows.len() {
        return false;
    }
    let n = a.len();
    let mut used = vec![false; n];
    let mut map = vec![usize::MAX; n];
    fn go(a: &Complex, b: &Complex, i: usize, used: &mut [bool], map: &mut [usize]) -> bool {
        let n = a.len();
        if i == n {
            let mut image: Vec<Arrow> = a
                .arrows
                .iter()
                .map(|x| Arrow {
                    from: map[x.from],
                    to: map[x.to],
                    u: x.u,
                })
                .collect();
            image.sort();
            return image == b.arrows;
        }
        let (ga, gb) = (&a.gens, &b.gens);
        for j in 0..n {
            if !used[j] && ga[i].maslov == gb[j].maslov && ga[i].alexander == gb[j].alexander {
                used[j] = true;
                map[i] = j;
                if go(a, b, i + 1, used, map) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    go(a, b, 0, &mut used, &mut map)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(gens: &[(&str, i64, i64)], arrows: &[(&str, &str, u32)]) -> RawComplex {
        RawComplex {
            generators: gens
                .iter()
                .map(|&(n, m, a)| RawGenerator {
                    name: n.into(),
                    maslov: m,
                    alexander: a,
                })
                .collect(),
            differential: arrows
                .iter()
                .map(|&(f, t, u)| RawArrow {
                    from: f.into(),
                    to: t.into(),
                    u,
                })
                .collect(),
        }
    }

    #[test]
    fn validation_examples() {
        let ok = raw(
            &[("a", 0, 1), ("b", -1, 0), ("c", -2, -1)],
            &[("b", "c", 0), ("b", "a", 1)],
        );
        assert!(validate_complex(&ok).is_ok());
        let bad = raw(
            &[("a", 0, 1), ("b", -1, 0), ("c", -3, -1)],
            &[("b", "c", 0), ("b", "a", 1)],
        );
        assert!(matches!(
            validate_complex(&bad),
            Err(FloerError::Grading { .. })
        ));
        let loop_ = raw(&[("x", 0, 0), ("y", 0, 0)], &[("x", "y", 0), ("y", "x", 0)]);
        assert!(matches!(
            validate_complex(&loop_),
            Err(FloerError::DSquared { .. })
        ));
    }

    #[test]
    fn validation_errors_are_distinct() {
        let up = raw(&[("a", 0, 0), ("b", -1, 1)], &[("a", "b", 0)]);
        assert!(matches!(
            validate_complex(&up),
            Err(FloerError::Filtration { .. })
        ));
        let two = raw(&[("a", 0, 0), ("b", 0, 0)], &[]);
        assert_eq!(validate_complex(&two), Err(FloerError::NotKnotLike(2)));
        let shifted = raw(&[("a", 2, 0)], &[]);
        assert_eq!(validate_complex(&shifted), Err(FloerError::TowerGrading));
        let missing = raw(&[("a", 0, 0)], &[("a", "z", 0)]);
        assert!(matches!(
            validate_complex(&missing),
            Err(FloerError::UnknownGenerator(_))
        ));
        let dup = raw(&[("a", 0, 0), ("a", 0, 0)], &[]);
        assert!(matches!(
            validate_complex(&dup),
            Err(FloerError::DuplicateGenerator(_))
        ));
    }

    #[test]
    fn duplicate_arrows_cancel() {
        let r = raw(
            &[("a", 0, 0), ("b", 1, 0), ("c", 0, 0)],
            &[("b", "c", 0), ("b", "c", 0)],
        );
        let err = validate_complex(&r).unwrap_err();
        assert_eq!(err, FloerError::NotKnotLike(3));
    }

    #[test]
    fn mirror_and_tensor_basics() {
        let t = trefoil();
        let m = mirror(&t);
        assert!(validate_complex(&m.to_raw()).is_ok());
        assert!(isomorphic(&mirror(&m), &t));
        assert!(isomorphic(&mirror(&unknot()), &unknot()));
        assert!(isomorphic(&tensor(&unknot(), &t), &t));
        let tt = tensor(&t, &t);
        assert_eq!(tt.top_alexander(), 2);
        assert!(validate_complex(&tt.to_raw()).is_ok());
        let json = t.to_json();
        assert_eq!(Complex::from_json(&json).unwrap(), t);
    }
}
