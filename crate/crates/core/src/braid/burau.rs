use std::fmt;

use super::{BraidError, BraidWord};
use crate::laurent::LaurentPoly;

/// Square matrix over `Z[t, 1/t]`, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct BurauMatrix {
    dim: usize,
    entries: Vec<LaurentPoly>,
}

impl BurauMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![LaurentPoly::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = LaurentPoly::one();
        }
        Self { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &LaurentPoly {
        &self.entries[r * self.dim + c]
    }

    fn get_mut(&mut self, r: usize, c: usize) -> &mut LaurentPoly {
        &mut self.entries[r * self.dim + c]
    }

    /// Reduced Burau matrix of a single letter `σ_i^{±1}` on `strands`
    /// strands. It differs from the identity only in column `i − 1`
    /// (0-based), which reads `(t, −t, 1)` on rows `i−2, i−1, i` for `σ_i`
    /// and `(1, −t⁻¹, t⁻¹)` for `σ_i^{-1}`, truncated at the borders.
    pub fn generator(strands: usize, letter: i32) -> Result<Self, BraidError> {
        Self::of_word(&BraidWord::new(strands, vec![letter])?)
    }

    fn letter_column(letter: i32) -> [LaurentPoly; 3] {
        if letter > 0 {
            [LaurentPoly::t(), -LaurentPoly::t(), LaurentPoly::one()]
        } else {
            [
                LaurentPoly::one(),
                LaurentPoly::monomial(-1, -1),
                LaurentPoly::monomial(1, -1),
            ]
        }
    }

    /// `self ← self · ρ(letter)`. Only column `i − 1` changes.
    pub fn apply_letter_right(&mut self, letter: i32) {
        let i = letter.unsigned_abs() as usize;
        let col = i - 1;
        let coeffs = Self::letter_column(letter);
        let dim = self.dim;
        for r in 0..dim {
            let mut acc = LaurentPoly::zero();
            for (k, c) in coeffs.iter().enumerate() {
                // source column col - 1 + k
                let Some(src) = (col + k).checked_sub(1).filter(|s| *s < dim) else {
                    continue;
                };
                let entry = self.get(r, src);
                if !entry.is_zero() {
                    acc = &acc + &(entry * c);
                }
            }
            *self.get_mut(r, col) = acc;
        }
    }

    pub fn of_word(word: &BraidWord) -> Result<Self, BraidError> {
        if word.strands() < 2 {
            return Err(BraidError::TooFewStrands);
        }
        let mut m = Self::identity(word.strands() - 1);
        for &l in word.letters() {
            m.apply_letter_right(l);
        }
        Ok(m)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = Self {
            dim: n,
            entries: vec![LaurentPoly::zero(); n * n],
        };
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let prod = a * b;
                        let slot = out.get_mut(i, j);
                        *slot = &*slot + &prod;
                    }
                }
            }
        }
        out
    }

    /// `I − self`.
    pub fn identity_minus(&self) -> Self {
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            *e = -&*e;
        }
        for i in 0..self.dim {
            let slot = out.get_mut(i, i);
            *slot = &*slot + &LaurentPoly::one();
        }
        out
    }

    pub fn det(&self) -> LaurentPoly {
        let rows = (0..self.dim)
            .map(|r| self.entries[r * self.dim..(r + 1) * self.dim].to_vec())
            .collect();
        det(rows)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim)
    }
}

/// Exact determinant over `Z[t, 1/t]`.
///
/// Eliminates with unit pivots `±t^k` while they exist (no denominators),
/// then finishes the remaining block with fraction-free Bareiss elimination.
pub fn det(mut a: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let n = a.len();
    let mut acc = LaurentPoly::one();
    let mut negate = false;
    let mut k = 0;

    while k < n {
        let mut best: Option<(usize, usize, usize)> = None;
        for (r, row) in a.iter().enumerate().skip(k) {
            let weight = row[k..].iter().filter(|e| !e.is_zero()).count();
            for (c, e) in row.iter().enumerate().skip(k) {
                if e.is_unit() && best.is_none_or(|(_, _, w)| weight < w) {
                    best = Some((r, c, weight));
                }
            }
        }
        let Some((pr, pc, _)) = best else { break };
        if pr != k {
            a.swap(pr, k);
            negate = !negate;
        }
        if pc != k {
            for row in a.iter_mut() {
                row.swap(pc, k);
            }
            negate = !negate;
        }
        let pivot = a[k][k].clone();
        let inv = pivot.unit_inverse().expect("unit pivot");
        let pivot_row = a[k].clone();
        for row in a.iter_mut().skip(k + 1) {
            if row[k].is_zero() {
                continue;
            }
            let factor = &row[k] * &inv;
            for j in k + 1..n {
                if !pivot_row[j].is_zero() {
                    row[j] = &row[j] - &(&factor * &pivot_row[j]);
                }
            }
            row[k] = LaurentPoly::zero();
        }
        acc = &acc * &pivot;
        k += 1;
    }

    if k < n {
        let rest = bareiss(a.into_iter().skip(k).map(|row| row[k..].to_vec()).collect());
        acc = &acc * &rest;
    }
    if negate {
        acc = -acc;
    }
    acc
}

fn bareiss(mut a: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let n = a.len();
    let mut prev = LaurentPoly::one();
    let mut negate = false;
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(r, k);
                    negate = !negate;
                }
                None => return LaurentPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss division is exact over an integral domain");
            }
            a[i][k] = LaurentPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

impl fmt::Debug for BurauMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BurauMatrix({}x{})", self.dim, self.dim)?;
        for r in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}
