//! Braid words, their closures, and the homogeneous-braid patterns `P_n`.

mod burau;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::laurent::{LaurentError, LaurentPoly, NormalForm};

pub use burau::{det, BurauMatrix};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BraidError {
    #[error("malformed braid text: {0}")]
    Parse(String),
    #[error("a braid needs at least one strand")]
    NoStrands,
    #[error("generator index {index} is outside [1, {max}]")]
    IndexOutOfRange { index: i64, max: usize },
    #[error("the reduced Burau representation needs at least 2 strands")]
    TooFewStrands,
    #[error("closure has {components} components, not a knot")]
    NotAKnot { components: usize },
    #[error("Burau determinant not divisible by (1 - t^n)/(1 - t); invariant violated")]
    InexactDivision,
    #[error("pattern family index must be at least 1, got {0}")]
    BadFamilyIndex(i64),
    #[error("genus is only certified for homogeneous braids")]
    NotHomogeneous,
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

/// A word in the braid group on `strands` strands. Letter `±i` is `σ_i^{±1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        let max = strands - 1;
        for &l in &letters {
            let index = l.unsigned_abs() as usize;
            if l == 0 || index > max {
                return Err(BraidError::IndexOutOfRange {
                    index: l as i64,
                    max,
                });
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation `self · other` on the same strand count.
    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.strands, other.strands, "strand counts differ");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Group inverse: reversed order, inverted letters.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// Cyclic rotation moving the first `k` letters to the end.
    pub fn rotate(&self, k: usize) -> BraidWord {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Cancels adjacent `σ_i σ_i^{-1}` pairs.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord {
            strands: self.strands,
            letters: out,
        }
    }

    /// Permutation induced on strand positions: `perm[p]` is the final
    /// position of the strand starting at position `p` (0-based).
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect(); // at[p] = strand at position p
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize;
            at.swap(i - 1, i);
        }
        let mut perm = vec![0; self.strands];
        for (p, &s) in at.iter().enumerate() {
            perm[s] = p;
        }
        perm
    }

    /// Cycles of the closure permutation, 1-based, each listed from its
    /// smallest element and sorted by that element.
    pub fn closure_cycles(&self) -> Vec<Vec<usize>> {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut cycles = Vec::new();
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cyc.push(p + 1);
                p = perm[p];
            }
            cycles.push(cyc);
        }
        cycles
    }

    /// The closure is a knot iff the permutation is a single `n`-cycle.
    pub fn closure_is_knot(&self) -> bool {
        self.closure_cycles().len() == 1
    }

    fn require_knot(&self) -> Result<(), BraidError> {
        let components = self.closure_cycles().len();
        if components == 1 {
            Ok(())
        } else {
            Err(BraidError::NotAKnot { components })
        }
    }

    /// Every generator appears, each with a single sign. (Stallings: the
    /// closure of such a braid is fibered.)
    pub fn is_homogeneous(&self) -> bool {
        let mut sign = vec![0i32; self.strands];
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize;
            let s = l.signum();
            if sign[i] == -s {
                return false;
            }
            sign[i] = s;
        }
        sign.iter().skip(1).all(|&s| s != 0)
    }

    pub fn reduced_burau(&self) -> Result<BurauMatrix, BraidError> {
        BurauMatrix::of_word(self)
    }

    /// Alexander polynomial of the closure in `S³`, from
    /// `det(I − ρ(β)) · (1 − t)/(1 − t^n)`.
    pub fn alexander_of_closure(&self) -> Result<NormalForm, BraidError> {
        self.require_knot()?;
        if self.strands == 1 {
            return Ok(NormalForm::one());
        }
        let rho = self.reduced_burau()?;
        let d = rho.identity_minus().det();
        let numer = &d * &(&LaurentPoly::one() - &LaurentPoly::t());
        let denom = &LaurentPoly::one() - &LaurentPoly::monomial(1, self.strands as i64);
        let delta = numer.div_exact(&denom).ok_or(BraidError::InexactDivision)?;
        Ok(delta.normalize_alexander()?)
    }

    /// Euler characteristic of the Bennequin surface, with the genus when the
    /// braid is homogeneous (the surface is then a fiber, hence minimal).
    pub fn bennequin_euler(&self) -> Result<BennequinSurface, BraidError> {
        self.require_knot()?;
        let euler = self.strands as i64 - self.letters.len() as i64;
        let genus = self.is_homogeneous().then_some((1 - euler) / 2);
        Ok(BennequinSurface { euler, genus })
    }
}

/// Euler characteristic and, for homogeneous braids, genus of the Seifert
/// surface built from `n` disks and one band per crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BennequinSurface {
    pub euler: i64,
    pub genus: Option<i64>,
}

impl BennequinSurface {
    pub fn certified_genus(&self) -> Result<i64, BraidError> {
        self.genus.ok_or(BraidError::NotHomogeneous)
    }
}

impl FromStr for BraidWord {
    type Err = BraidError;

    /// Parses `n: w1 w2 ...`, where each `w` is a nonzero generator index
    /// whose sign is the crossing sign.
    fn from_str(text: &str) -> Result<Self, BraidError> {
        let (head, body) = text
            .split_once(':')
            .ok_or_else(|| BraidError::Parse(format!("missing ':' in {text:?}")))?;
        let strands: usize = head
            .trim()
            .parse()
            .map_err(|_| BraidError::Parse(format!("bad strand count {:?}", head.trim())))?;
        let letters = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|w| {
                w.parse::<i32>()
                    .map_err(|_| BraidError::Parse(format!("bad letter {w:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        BraidWord::new(strands, letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

impl Serialize for BraidWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for BraidWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// A knot in the solid torus given as a braid closure about the torus axis.
/// All strands run the same way, so the winding number is the strand count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternDesc {
    pub braid: BraidWord,
    pub winding: i64,
}

impl PatternDesc {
    pub fn new(braid: BraidWord) -> Result<Self, BraidError> {
        braid.require_knot()?;
        let winding = braid.strands() as i64;
        Ok(Self { braid, winding })
    }
}

/// `P_n`: closure of `σ_{2n} σ_{2n−1}^{-1} σ_{2n−2} ⋯ σ_1^{-1}` on `2n + 1`
/// strands.
pub fn make_pattern_pn(n: i64) -> Result<PatternDesc, BraidError> {
    if n < 1 {
        return Err(BraidError::BadFamilyIndex(n));
    }
    let top = 2 * n as i32;
    let letters = (0..top)
        .map(|i| if i % 2 == 0 { top - i } else { -(top - i) })
        .collect();
    PatternDesc::new(BraidWord::new(2 * n as usize + 1, letters)?)
}
