//! Exact integer Laurent polynomials in one variable `t`.
//!
//! Coefficients are arbitrary precision and storage is sparse (exponent to
//! coefficient), since the Alexander polynomials of the satellite family have
//! three terms at degrees near 400 while their shifted forms carry binomial
//! coefficients far beyond 64 bits.

mod dense;
mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

pub use dense::IntPoly;
pub use parse::ParsePolyError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LaurentError {
    #[error("substitution t -> t^0 is not allowed")]
    ZeroSubstitution,
    #[error("polynomial has a negative exponent t^{0}")]
    NegativeExponent(i64),
    #[error("the zero polynomial has no normal form")]
    ZeroPolynomial,
    #[error(transparent)]
    Parse(#[from] ParsePolyError),
}

/// Integer Laurent polynomial. No stored coefficient is ever zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * t^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c.into());
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// True for `±t^k`, the units of the Laurent ring.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| c.abs().is_one())
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Iterates `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `max_exp - min_exp`; zero for the zero polynomial.
    pub fn span(&self) -> i64 {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    /// Coefficient of the highest power of `t`.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Multiplies by `c * t^e`.
    pub fn scale(&self, c: &BigInt, e: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (k + e, v * c)).collect(),
        }
    }

    /// Multiplies by `t^e`.
    pub fn shift(&self, e: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, v)| (k + e, v.clone())).collect(),
        }
    }

    /// `p(t) -> p(t^w)`: the substitution behind `Δ_J(t^w)` in the cabling formula.
    pub fn substitute_power(&self, w: i64) -> Result<Self, LaurentError> {
        if w == 0 {
            return Err(LaurentError::ZeroSubstitution);
        }
        Ok(Self {
            terms: self.terms.iter().map(|(e, c)| (e * w, c.clone())).collect(),
        })
    }

    /// `p(t) -> p(1/t)`.
    pub fn reciprocal(&self) -> Self {
        self.substitute_power(-1).expect("w = -1 is nonzero")
    }

    /// `p(t) -> p(t + c)` for a polynomial without negative exponents.
    pub fn shift_compose(&self, c: i64) -> Result<Self, LaurentError> {
        Ok(IntPoly::try_from(self)?
            .shift_compose(&BigInt::from(c))
            .to_laurent())
    }

    /// Inverse of a unit `±t^k`.
    pub fn unit_inverse(&self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        Some(Self::monomial(c.clone(), -e))
    }

    /// Exact quotient `self / divisor` in `Z[t, 1/t]`, or `None` when the
    /// division leaves a remainder or needs non-integer coefficients.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dlo = divisor.min_exp()?;
        let dhi = divisor.max_exp()?;
        let dlead = divisor.terms[&dhi].clone();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        // Long division from the top; a Laurent quotient exists iff the
        // remainder vanishes before its span drops below the divisor's.
        while !rem.is_zero() {
            let rhi = rem.max_exp()?;
            let rlo = rem.min_exp()?;
            if rhi - rlo < dhi - dlo {
                return None;
            }
            let (q, r) = rem.terms[&rhi].div_rem(&dlead);
            if !r.is_zero() {
                return None;
            }
            let e = rhi - dhi;
            rem = &rem - &divisor.scale(&q, e);
            quot.add_term(e, q);
        }
        Some(quot)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `t^span · p(1/t) = p(t)` after removing the lowest power of `t`.
    pub fn is_palindromic(&self) -> bool {
        let Some(lo) = self.min_exp() else {
            return true;
        };
        let hi = self.max_exp().unwrap_or(lo);
        self.terms
            .iter()
            .all(|(e, c)| self.terms.get(&(hi + lo - e)) == Some(c))
    }

    /// Removes the unit `±t^k` so that the lowest exponent is 0 and the
    /// leading coefficient is positive.
    pub fn normalize_alexander(&self) -> Result<NormalForm, LaurentError> {
        let lo = self.min_exp().ok_or(LaurentError::ZeroPolynomial)?;
        let negative = self.leading_coeff().is_some_and(|c| c.is_negative());
        let sign = if negative { -1 } else { 1 };
        let poly = self.scale(&BigInt::from(sign), -lo);
        Ok(NormalForm {
            poly,
            unit_sign: sign,
            unit_exp: lo,
        })
    }
}

/// Alexander-normalized polynomial together with the removed unit, so that
/// `original = unit_sign * t^unit_exp * poly`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NormalForm {
    pub poly: LaurentPoly,
    pub unit_sign: i8,
    pub unit_exp: i64,
}

impl NormalForm {
    pub fn one() -> Self {
        LaurentPoly::one().normalize_alexander().expect("nonzero")
    }

    /// The removed unit `unit_sign * t^unit_exp`.
    pub fn unit(&self) -> LaurentPoly {
        LaurentPoly::monomial(self.unit_sign, self.unit_exp)
    }

    pub fn degree(&self) -> i64 {
        self.poly.max_exp().unwrap_or(0)
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let var = match *e {
                0 => String::new(),
                1 => "t".to_string(),
                e => format!("t^{e}"),
            };
            if var.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn ring_examples() {
        assert_eq!(p("t + 1") * p("t - 1"), p("t^2 - 1"));
        assert_eq!(p("t^-1 + 1") * p("t + 1"), p("t^-1 + 2 + t"));
        let q = p("t^5 - 7*t^-3 + 2");
        assert!((&q - &q).is_zero());
    }

    #[test]
    fn substitute_power_examples() {
        assert_eq!(
            p("t^2 - 3*t + 1").substitute_power(5).unwrap(),
            p("t^10 - 3*t^5 + 1")
        );
        let q = p("4*t^3 - t + 9");
        assert_eq!(q.substitute_power(1).unwrap(), q);
        assert_eq!(p("t").substitute_power(-1).unwrap(), p("t^-1"));
        assert_eq!(q.substitute_power(0), Err(LaurentError::ZeroSubstitution));
    }

    #[test]
    fn shift_compose_examples() {
        assert_eq!(
            p("t^2 - 3*t + 1").shift_compose(-1).unwrap(),
            p("t^2 - 5*t + 5")
        );
        let shifted = p("t^10 - 3*t^5 + 1").shift_compose(-1).unwrap();
        assert_eq!(shifted.coeff(0), BigInt::from(5));
        let q = p("3*t^4 - t + 2");
        assert_eq!(q.shift_compose(0).unwrap(), q);
        assert_eq!(
            p("t^-1 + 1").shift_compose(2),
            Err(LaurentError::NegativeExponent(-1))
        );
    }

    #[test]
    fn normalize_examples() {
        let nf = p("-t^3 + 3*t^2 - t").normalize_alexander().unwrap();
        assert_eq!(nf.poly, p("t^2 - 3*t + 1"));
        assert_eq!(nf.unit(), p("-t"));
        assert_eq!(&nf.unit() * &nf.poly, p("-t^3 + 3*t^2 - t"));

        assert_eq!(p("1").normalize_alexander().unwrap().poly, p("1"));
        assert_eq!(
            p("t^-1 - 3 + t").normalize_alexander().unwrap().poly,
            p("t^2 - 3*t + 1")
        );
        assert_eq!(
            LaurentPoly::zero().normalize_alexander(),
            Err(LaurentError::ZeroPolynomial)
        );
    }

    #[test]
    fn exact_division() {
        let num = p("1 - t^6");
        assert_eq!(num.div_exact(&p("1 - t^3")).unwrap(), p("1 + t^3"));
        assert_eq!(
            p("t^-2 + 2*t^-1 + 1").div_exact(&p("1 + t")).unwrap(),
            p("t^-2 + t^-1")
        );
        assert!(p("t^2 + 1").div_exact(&p("t + 1")).is_none());
        assert!(p("3*t + 1").div_exact(&p("2")).is_none());
    }

    #[test]
    fn palindromic_check() {
        assert!(p("t^2 - 3*t + 1").is_palindromic());
        assert!(p("t^-1 - 3 + t").is_palindromic());
        assert!(!p("t^2 - 3*t + 2").is_palindromic());
    }
}
