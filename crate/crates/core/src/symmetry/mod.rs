//! Symmetry calculus for knots, patterns in the solid torus, and
//! two-component links.
//!
//! A knot fact `(α, ε)` says some self-homeomorphism of `S³` of class `α`
//! carries the knot to itself with orientation class `ε`. A pattern fact
//! `([α, ε₁], ε₂)` is the same for the solid torus, with `ε₁` the action on
//! the longitude. A link fact `(α, ε₁, ε₂)` records the action on both
//! components. Facts are positive evidence only; refutations come from the
//! winding-number and linking-number obstructions and from declared
//! negative facts.

mod detect;
mod engine;
mod text;

use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use detect::detect_rotational_antisymmetry;
pub use engine::{
    satellite_backward, satellite_forward, Branch, Contradiction, Disjunction, Entry, FactBase,
    Origin, Rule, Satellite,
};
pub use text::parse_facts;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymError {
    #[error("the (J+) pattern/link translation is not covered by Hartley's correspondence")]
    JPlusTranslation,
    #[error("expected a {expected} fact, got {got}")]
    WrongShape { expected: &'static str, got: String },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Orientation class `ε = ±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

impl FromStr for Sign {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "1" | "+1" | "+" => Ok(Sign::Plus),
            "-1" | "-" => Ok(Sign::Minus),
            _ => Err(format!("expected ±1, got {s:?}")),
        }
    }
}

/// Homeomorphism class `α`: orientation preserving (`+1`) or reversing
/// (`−1`), optionally an involution (`J₊`, `J₋`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SymClass {
    Plus,
    Minus,
    JPlus,
    JMinus,
}

impl SymClass {
    /// An involution is in particular a homeomorphism of its orientation
    /// class: `J₊ ⇒ +1`, `J₋ ⇒ −1`.
    pub fn weaken(self) -> Option<SymClass> {
        match self {
            SymClass::JPlus => Some(SymClass::Plus),
            SymClass::JMinus => Some(SymClass::Minus),
            _ => None,
        }
    }

    /// `+1`/`−1` as a sign, `None` for the involution classes.
    pub fn as_sign(self) -> Option<Sign> {
        match self {
            SymClass::Plus => Some(Sign::Plus),
            SymClass::Minus => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl From<Sign> for SymClass {
    fn from(s: Sign) -> Self {
        match s {
            Sign::Plus => SymClass::Plus,
            Sign::Minus => SymClass::Minus,
        }
    }
}

impl fmt::Display for SymClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymClass::Plus => "+1",
            SymClass::Minus => "-1",
            SymClass::JPlus => "J+",
            SymClass::JMinus => "J-",
        })
    }
}

impl FromStr for SymClass {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "J+" | "J_+" => Ok(SymClass::JPlus),
            "J-" | "J_-" => Ok(SymClass::JMinus),
            other => other.parse::<Sign>().map(SymClass::from),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SymData {
    /// `(α, ε)` for a knot in `S³`.
    Knot { alpha: SymClass, eps: Sign },
    /// `([α, ε₁], ε₂)` for a knot in the solid torus.
    Pattern {
        alpha: SymClass,
        eps1: Sign,
        eps2: Sign,
    },
    /// `(α, ε₁, ε₂)` for a two-component link.
    Link2 {
        alpha: SymClass,
        eps1: Sign,
        eps2: Sign,
    },
}

impl SymData {
    pub fn alpha(&self) -> SymClass {
        match *self {
            SymData::Knot { alpha, .. }
            | SymData::Pattern { alpha, .. }
            | SymData::Link2 { alpha, .. } => alpha,
        }
    }

    fn with_alpha(self, alpha: SymClass) -> SymData {
        match self {
            SymData::Knot { eps, .. } => SymData::Knot { alpha, eps },
            SymData::Pattern { eps1, eps2, .. } => SymData::Pattern { alpha, eps1, eps2 },
            SymData::Link2 { eps1, eps2, .. } => SymData::Link2 { alpha, eps1, eps2 },
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            SymData::Knot { .. } => "knot",
            SymData::Pattern { .. } => "pattern",
            SymData::Link2 { .. } => "link",
        }
    }
}

impl fmt::Display for SymData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymData::Knot { alpha, eps } => write!(f, "({alpha}, {eps})"),
            SymData::Pattern { alpha, eps1, eps2 } => write!(f, "([{alpha}, {eps1}], {eps2})"),
            SymData::Link2 { alpha, eps1, eps2 } => write!(f, "({alpha}, {eps1}, {eps2})"),
        }
    }
}

/// A symmetry assertion about a named knot, pattern, or link.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SymFact {
    pub subject: String,
    pub data: SymData,
}

impl SymFact {
    pub fn knot(subject: impl Into<String>, alpha: SymClass, eps: Sign) -> Self {
        Self {
            subject: subject.into(),
            data: SymData::Knot { alpha, eps },
        }
    }

    pub fn pattern(subject: impl Into<String>, alpha: SymClass, eps1: Sign, eps2: Sign) -> Self {
        Self {
            subject: subject.into(),
            data: SymData::Pattern { alpha, eps1, eps2 },
        }
    }

    pub fn link(subject: impl Into<String>, alpha: SymClass, eps1: Sign, eps2: Sign) -> Self {
        Self {
            subject: subject.into(),
            data: SymData::Link2 { alpha, eps1, eps2 },
        }
    }

    /// The same fact with `J±` weakened to `±1`, if `α` is an involution class.
    pub fn weaken(&self) -> Option<SymFact> {
        let alpha = self.data.alpha().weaken()?;
        Some(SymFact {
            subject: self.subject.clone(),
            data: self.data.with_alpha(alpha),
        })
    }

    /// The fact together with everything weakening gives.
    pub fn weakening_closure(&self) -> Vec<SymFact> {
        let mut out = vec![self.clone()];
        if let Some(w) = self.weaken() {
            out.push(w);
        }
        out
    }

    /// −amphicheiral: knot symmetry `(−1, −1)`.
    pub fn is_minus_amphicheiral(&self) -> bool {
        matches!(
            self.data,
            SymData::Knot {
                alpha: SymClass::Minus,
                eps: Sign::Minus
            }
        )
    }

    /// Strongly −amphicheiral: knot symmetry `(J₋, −1)`.
    pub fn is_strongly_minus_amphicheiral(&self) -> bool {
        matches!(
            self.data,
            SymData::Knot {
                alpha: SymClass::JMinus,
                eps: Sign::Minus
            }
        )
    }
}

impl fmt::Display for SymFact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.data.kind(), self.subject, self.data)
    }
}

/// Name of the associated link `μ_P ∪ P(U)` of a pattern `P`.
pub fn associated_link_name(pattern: &str) -> String {
    format!("link({pattern})")
}

/// Hartley's pattern-to-associated-link correspondence:
/// `([ε₀, ε₁], ε₂) ↦ (ε₀, ε₀ε₁, ε₂)` and `([J₋, ε₁], ε₂) ↦ (J₋, −ε₁, ε₂)`.
pub fn translate_pattern_link(fact: &SymFact) -> Result<SymFact, SymError> {
    let SymData::Pattern { alpha, eps1, eps2 } = fact.data else {
        return Err(SymError::WrongShape {
            expected: "pattern",
            got: fact.to_string(),
        });
    };
    let link_eps1 = match alpha {
        SymClass::Plus | SymClass::Minus => alpha.as_sign().unwrap() * eps1,
        SymClass::JMinus => -eps1,
        SymClass::JPlus => return Err(SymError::JPlusTranslation),
    };
    Ok(SymFact::link(
        associated_link_name(&fact.subject),
        alpha,
        link_eps1,
        eps2,
    ))
}

/// Inverse of [`translate_pattern_link`]; the link must be named
/// `link(P)` for a pattern `P`.
pub fn translate_link_pattern(fact: &SymFact) -> Result<SymFact, SymError> {
    let wrong = || SymError::WrongShape {
        expected: "associated link",
        got: fact.to_string(),
    };
    let SymData::Link2 { alpha, eps1, eps2 } = fact.data else {
        return Err(wrong());
    };
    let pattern = fact
        .subject
        .strip_prefix("link(")
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(wrong)?;
    let pat_eps1 = match alpha {
        SymClass::Plus | SymClass::Minus => alpha.as_sign().unwrap() * eps1,
        SymClass::JMinus => -eps1,
        SymClass::JPlus => return Err(SymError::JPlusTranslation),
    };
    Ok(SymFact::pattern(pattern, alpha, pat_eps1, eps2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Consistency {
    Consistent,
    Contradiction,
}

/// A pattern symmetry `([−1, ε₁], ε₂)` with nonzero winding number forces
/// `ε₁ε₂ = 1`.
pub fn winding_obstruction(fact: &SymFact, winding: i64) -> Result<Consistency, SymError> {
    match fact.data {
        SymData::Pattern {
            alpha: SymClass::Minus,
            eps1,
            eps2,
        } => Ok(if winding != 0 && eps1 * eps2 == Sign::Minus {
            Consistency::Contradiction
        } else {
            Consistency::Consistent
        }),
        _ => Err(SymError::WrongShape {
            expected: "pattern ([-1, e1], e2)",
            got: fact.to_string(),
        }),
    }
}

/// A link symmetry `(−1, ε₁, ε₂)` with `ε₁ε₂ = 1` forces the linking
/// number to vanish, since it then equals its own negative.
pub fn linking_obstruction(fact: &SymFact, linking: i64) -> Result<Consistency, SymError> {
    match fact.data {
        SymData::Link2 {
            alpha: SymClass::Minus,
            eps1,
            eps2,
        } => Ok(if linking != 0 && eps1 * eps2 == Sign::Plus {
            Consistency::Contradiction
        } else {
            Consistency::Consistent
        }),
        _ => Err(SymError::WrongShape {
            expected: "link (-1, e1, e2)",
            got: fact.to_string(),
        }),
    }
}
