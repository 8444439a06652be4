use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::{certify_with, Atomic, KnotDescriptor, PatternSpec, PipelineError};
use crate::irred::{IrredConfig, IrredVerdict};
use crate::laurent::LaurentPoly;
use crate::par::Exec;
use crate::symmetry::{Sign, SymClass};

/// The figure-eight knot with its declared properties.
pub fn figure_eight() -> KnotDescriptor {
    KnotDescriptor::Atomic(Atomic {
        name: "4_1".into(),
        alexander: LaurentPoly::from_terms([(-1, 1), (0, -3), (1, 1)]),
        genus: 1,
        fibered: Some(true),
        hyperbolic: true,
        prime: Some(true),
        symmetries: vec![super::KnotSym {
            alpha: SymClass::JMinus,
            eps: Sign::Minus,
        }],
        non_symmetries: Vec::new(),
        citations: vec![
            "genus one fibered knot".into(),
            "hyperbolic and strongly -amphicheiral".into(),
        ],
    })
}

/// `P_n(4₁)`.
pub fn family_descriptor(n: i64) -> KnotDescriptor {
    KnotDescriptor::satellite(PatternSpec::family(n), figure_eight())
}

/// One row of the family table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub n: i64,
    pub winding: i64,
    pub pattern: String,
    /// `Δ_{P_n}` from the Burau representation is 1.
    pub pattern_trivial: bool,
    pub alexander: String,
    pub irreducibility: String,
    pub tier: String,
    pub certificate: String,
    pub symmetry: String,
    pub verdict: String,
    pub millis: u64,
}

impl ScanRow {
    pub fn is_irreducible(&self) -> bool {
        self.irreducibility == "irreducible"
    }
}

pub fn scan_row(n: i64, cfg: &IrredConfig) -> Result<ScanRow, PipelineError> {
    let start = Instant::now();
    let c = certify_with(&family_descriptor(n), cfg)?;
    let Some(super::AlexanderStep::Cabling {
        braid,
        pattern_alexander,
        winding,
        ..
    }) = c.alexander.last()
    else {
        unreachable!("a satellite ends in a cabling step")
    };
    let (irreducibility, tier, certificate) = match &c.irreducibility {
        Some(IrredVerdict::Irreducible { certificate }) => (
            "irreducible",
            certificate.tier().to_string(),
            certificate.to_string(),
        ),
        Some(IrredVerdict::Reducible { factor }) => {
            ("reducible", "-".into(), format!("factor {factor}"))
        }
        Some(IrredVerdict::Unknown { .. }) | None => ("unknown", "-".into(), "-".into()),
    };
    Ok(ScanRow {
        n,
        winding: *winding,
        pattern: braid.to_string(),
        pattern_trivial: pattern_alexander.poly.is_one(),
        alexander: c.delta.to_string(),
        irreducibility: irreducibility.into(),
        tier,
        certificate,
        symmetry: c
            .amphicheiral
            .derived
            .as_ref()
            .map_or_else(|| "-".into(), |f| f.data.to_string()),
        verdict: c.verdict.to_string(),
        millis: start.elapsed().as_millis() as u64,
    })
}

/// Rows for `n = 1..=n_max`, in order of `n`. Rows run under `exec`; each
/// row is itself sequential so the table does not depend on the strategy.
pub fn scan_family(n_max: i64, exec: Exec) -> Result<Vec<ScanRow>, PipelineError> {
    if n_max < 1 {
        return Err(PipelineError::Descriptor(format!(
            "n_max = {n_max} must be at least 1"
        )));
    }
    let cfg = IrredConfig {
        exec: Exec::Sequential,
        ..IrredConfig::default()
    };
    exec.map((1..=n_max).collect(), |n| scan_row(n, &cfg))
        .into_iter()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_rows() {
        let rows = scan_family(3, Exec::Parallel).unwrap();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0].alexander, "t^6 - 3*t^3 + 1");
        assert_eq!(rows[0].winding, 3);
        assert_eq!(rows[0].pattern, "3: 2 -1");
        assert!(rows.iter().all(|r| r.pattern_trivial && r.is_irreducible()));
        assert_eq!(rows[1].certificate, "Eisenstein(-1, 5)");
        assert!(rows
            .iter()
            .all(|r| r.verdict == "MIYAZAKI" && r.symmetry == "(J-, -1)"));
        let seq = scan_family(3, Exec::Sequential).unwrap();
        let strip = |v: Vec<ScanRow>| {
            v.into_iter()
                .map(|r| ScanRow { millis: 0, ..r })
                .collect::<Vec<_>>()
        };
        assert_eq!(strip(rows), strip(seq));
    }
}
