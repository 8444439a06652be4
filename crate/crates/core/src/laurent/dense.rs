use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{LaurentError, LaurentPoly};

/// Dense polynomial with integer coefficients, `coeffs[i]` multiplying `t^i`.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        let g = self.content();
        if g.is_zero() {
            return Self::default();
        }
        let sign = if self.leading().is_some_and(|c| c.is_negative()) {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        let d = &g * &sign;
        Self::new(self.coeffs.iter().map(|c| c / &d).collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// `p(t) -> p(t + c)` by Horner's rule.
    pub fn shift_compose(&self, c: &BigInt) -> Self {
        let mut acc: Vec<BigInt> = Vec::with_capacity(self.coeffs.len());
        for a in self.coeffs.iter().rev() {
            // acc <- acc * (t + c) + a
            let mut next = vec![BigInt::zero(); acc.len() + 1];
            for (i, v) in acc.iter().enumerate() {
                next[i + 1] += v;
                next[i] += v * c;
            }
            next[0] += a;
            acc = next;
        }
        Self::new(acc)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Exact quotient over the integers, `None` if `divisor` does not divide.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree()?;
        let Some(nd) = self.degree() else {
            return Some(Self::default());
        };
        if nd < dd {
            return None;
        }
        let lead = divisor.leading()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * dc;
            }
            quot[k] = q;
        }
        rem.iter().all(|c| c.is_zero()).then(|| Self::new(quot))
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i64, c.clone())),
        )
    }

    /// Euclidean norm rounded up, used for coefficient bounds.
    pub fn norm2_ceil(&self) -> BigInt {
        let sq: BigInt = self.coeffs.iter().map(|c| c * c).sum();
        let r = sq.sqrt();
        if &r * &r == sq {
            r
        } else {
            r + 1
        }
    }
}

impl TryFrom<&LaurentPoly> for IntPoly {
    type Error = LaurentError;

    fn try_from(p: &LaurentPoly) -> Result<Self, LaurentError> {
        if let Some(lo) = p.min_exp().filter(|e| *e < 0) {
            return Err(LaurentError::NegativeExponent(lo));
        }
        let deg = p.max_exp().unwrap_or(-1);
        let mut coeffs = vec![BigInt::zero(); (deg + 1) as usize];
        for (e, c) in p.terms() {
            coeffs[e as usize] = c.clone();
        }
        Ok(Self::new(coeffs))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_laurent().fmt(f)
    }
}

impl std::str::FromStr for IntPoly {
    type Err = LaurentError;

    fn from_str(s: &str) -> Result<Self, LaurentError> {
        let p: LaurentPoly = s.parse()?;
        IntPoly::try_from(&p)
    }
}

impl serde::Serialize for IntPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for IntPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_roundtrip_small() {
        let p = IntPoly::from_i64(&[1, 0, -3, 0, 0, 7]);
        let c = BigInt::from(3);
        assert_eq!(p.shift_compose(&c).shift_compose(&-c), p);
    }

    #[test]
    fn exact_division() {
        let a = IntPoly::from_i64(&[-1, 0, 0, 0, 1]);
        let b = IntPoly::from_i64(&[-1, 1]);
        assert_eq!(a.div_exact(&b).unwrap(), IntPoly::from_i64(&[1, 1, 1, 1]));
        assert!(a.div_exact(&IntPoly::from_i64(&[1, 0, 0, 1])).is_none());
        assert!(IntPoly::from_i64(&[1, 3])
            .div_exact(&IntPoly::from_i64(&[1, 2]))
            .is_none());
    }

    #[test]
    fn content_and_primitive() {
        let p = IntPoly::from_i64(&[6, -4, -2]);
        assert_eq!(p.content(), BigInt::from(2));
        assert_eq!(p.primitive_part(), IntPoly::from_i64(&[-3, 2, 1]));
    }

    #[test]
    fn negative_exponent_rejected() {
        let p = LaurentPoly::from_terms([(-2, 1), (0, 1)]);
        assert_eq!(
            IntPoly::try_from(&p),
            Err(LaurentError::NegativeExponent(-2))
        );
    }
}
