//! Miyazaki certification of atomic knots and iterated satellites, and the
//! scan over the family `P_n(4₁)`.

mod certify;
mod scan;

use serde::{Deserialize, Serialize};

use crate::braid::{make_pattern_pn, BraidError, BraidWord, PatternDesc};
use crate::laurent::{LaurentError, LaurentPoly, NormalForm};
use crate::symmetry::{Sign, SymClass};

pub use certify::{
    certify_miyazaki, certify_with, evaluate, replay, AlexanderStep, AmphiTrace, Certificate,
    FiberStep, FiberedEvidence, GenusStep, PrimeStep, Verdict,
};
pub use scan::{family_descriptor, figure_eight, scan_family, scan_row, ScanRow};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PipelineError {
    #[error("winding number 0 is not a satellite")]
    ZeroWinding,
    #[error("odd degree {0}: not the Alexander polynomial of a fibered knot")]
    OddDegree(i64),
    #[error("descriptor: {0}")]
    Descriptor(String),
    #[error("{knot}: declared genus {genus} but deg Δ = {degree} for a fibered knot")]
    GenusMismatch {
        knot: String,
        genus: u64,
        degree: i64,
    },
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error("replay: {0}")]
    Replay(String),
}

/// `Δ_P(t) · Δ_J(t^w)`, normalized.
pub fn satellite_alexander(
    dp: &NormalForm,
    dj: &NormalForm,
    w: i64,
) -> Result<NormalForm, PipelineError> {
    if w == 0 {
        return Err(PipelineError::ZeroWinding);
    }
    let cabled = dj.poly.substitute_power(w)?;
    Ok((&dp.poly * &cabled).normalize_alexander()?)
}

/// Genus of a fibered knot: half the degree of its normalized Alexander
/// polynomial.
pub fn fibered_genus(d: &NormalForm) -> Result<u64, PipelineError> {
    let deg = d.degree();
    if deg % 2 != 0 {
        return Err(PipelineError::OddDegree(deg));
    }
    Ok((deg / 2) as u64)
}

/// A symmetry class `(α, ε)` of a knot, written `"J- -1"` or `"(-1, -1)"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct KnotSym {
    pub alpha: SymClass,
    pub eps: Sign,
}

impl std::str::FromStr for KnotSym {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let cleaned: String = s
            .chars()
            .map(|c| if "(),".contains(c) { ' ' } else { c })
            .collect();
        let parts: Vec<&str> = cleaned.split_whitespace().collect();
        let [a, e] = parts[..] else {
            return Err(format!("expected `alpha eps`, got {s:?}"));
        };
        Ok(Self {
            alpha: a.parse()?,
            eps: e.parse()?,
        })
    }
}

impl std::fmt::Display for KnotSym {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.alpha, self.eps)
    }
}

impl Serialize for KnotSym {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for KnotSym {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// Declared data for a knot taken as an axiom.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Atomic {
    pub name: String,
    pub alexander: LaurentPoly,
    pub genus: u64,
    /// `None` when fiberedness is not known.
    #[serde(default)]
    pub fibered: Option<bool>,
    #[serde(default)]
    pub hyperbolic: bool,
    #[serde(default)]
    pub prime: Option<bool>,
    #[serde(default)]
    pub symmetries: Vec<KnotSym>,
    /// Symmetries the knot is declared not to have.
    #[serde(default)]
    pub non_symmetries: Vec<KnotSym>,
    /// Where the declarations come from.
    #[serde(default)]
    pub citations: Vec<String>,
}

/// A pattern given either by family index or by an explicit braid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PatternSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub braid: Option<BraidWord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl PatternSpec {
    pub fn family(n: i64) -> Self {
        Self {
            family: Some(n),
            braid: None,
            name: None,
        }
    }

    pub fn braid(b: BraidWord) -> Self {
        Self {
            family: None,
            braid: Some(b),
            name: None,
        }
    }

    pub fn resolve(&self) -> Result<PatternDesc, PipelineError> {
        match (&self.family, &self.braid) {
            (Some(n), None) => Ok(make_pattern_pn(*n)?),
            (None, Some(b)) => Ok(PatternDesc::new(b.clone())?),
            _ => Err(PipelineError::Descriptor(
                "a pattern needs exactly one of `family` and `braid`".into(),
            )),
        }
    }

    pub fn display_name(&self) -> String {
        if let Some(n) = &self.name {
            return n.clone();
        }
        match (&self.family, &self.braid) {
            (Some(n), _) => format!("P_{n}"),
            (_, Some(b)) => format!("[{b}]"),
            _ => "?".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KnotDescriptor {
    Atomic(Atomic),
    Satellite {
        pattern: PatternSpec,
        companion: Box<KnotDescriptor>,
    },
}

impl KnotDescriptor {
    pub fn satellite(pattern: PatternSpec, companion: KnotDescriptor) -> Self {
        KnotDescriptor::Satellite {
            pattern,
            companion: Box::new(companion),
        }
    }

    pub fn name(&self) -> String {
        match self {
            KnotDescriptor::Atomic(a) => a.name.clone(),
            KnotDescriptor::Satellite { pattern, companion } => {
                format!("{}({})", pattern.display_name(), companion.name())
            }
        }
    }

    pub fn from_json(text: &str) -> Result<Self, PipelineError> {
        serde_json::from_str(text).map_err(|e| PipelineError::Descriptor(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("descriptor serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf(s: &str) -> NormalForm {
        s.parse::<LaurentPoly>()
            .unwrap()
            .normalize_alexander()
            .unwrap()
    }

    #[test]
    fn cabling_examples() {
        let one = NormalForm::one();
        let fig8 = nf("t^2 - 3t + 1");
        assert_eq!(
            satellite_alexander(&one, &fig8, 5).unwrap(),
            nf("t^10 - 3t^5 + 1")
        );
        assert_eq!(satellite_alexander(&one, &fig8, 1).unwrap(), fig8);
        assert_eq!(
            satellite_alexander(&one, &fig8, -3).unwrap().poly,
            nf("t^6 - 3t^3 + 1").poly
        );
        let prod = satellite_alexander(&nf("t^2 - t + 1"), &fig8, 2).unwrap();
        assert_eq!(prod, nf("t^6 - t^5 - 2t^4 + 3t^3 - 2t^2 - t + 1"));
        assert_eq!(
            satellite_alexander(&one, &fig8, 0),
            Err(PipelineError::ZeroWinding)
        );
    }

    #[test]
    fn genus_examples() {
        assert_eq!(fibered_genus(&nf("t^2 - 3t + 1")).unwrap(), 1);
        assert_eq!(fibered_genus(&NormalForm::one()).unwrap(), 0);
        assert_eq!(fibered_genus(&nf("t^10 - 3t^5 + 1")).unwrap(), 5);
        assert_eq!(
            fibered_genus(&nf("t + 1")),
            Err(PipelineError::OddDegree(1))
        );
    }

    #[test]
    fn descriptor_json_roundtrip() {
        let d = family_descriptor(3);
        assert_eq!(d.name(), "P_3(4_1)");
        let back = KnotDescriptor::from_json(&d.to_json()).unwrap();
        assert_eq!(back, d);
        assert!(KnotDescriptor::from_json(r#"{"atomic": {"name": "x"}}"#).is_err());
        let both = r#"{"satellite": {"pattern": {"family": 1, "braid": "3: 2 -1"},
            "companion": {"atomic": {"name": "u", "alexander": "1", "genus": 0}}}}"#;
        let d = KnotDescriptor::from_json(both).unwrap();
        let KnotDescriptor::Satellite { pattern, .. } = d else {
            panic!()
        };
        assert!(pattern.resolve().is_err());
        assert_eq!(
            "(J-, -1)".parse::<KnotSym>().unwrap(),
            "J- -1".parse().unwrap()
        );
    }
}
