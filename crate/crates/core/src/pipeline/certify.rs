use serde::{Deserialize, Serialize};

use super::{fibered_genus, satellite_alexander, Atomic, KnotDescriptor, PipelineError};
use crate::braid::BraidWord;
use crate::irred::{decide_irreducible, IrredConfig, IrredError, IrredVerdict};
use crate::laurent::{IntPoly, NormalForm};
use crate::symmetry::{
    detect_rotational_antisymmetry, FactBase, Satellite, Sign, SymClass, SymFact,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FiberStep {
    Declared {
        knot: String,
        fibered: Option<bool>,
    },
    /// A homogeneous braid closes to a fibered pattern; with a fibered
    /// companion the satellite is fibered.
    Stallings {
        knot: String,
        braid: BraidWord,
        homogeneous: bool,
        companion: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberedEvidence {
    /// `Some(false)` is a disproof, `None` means not established.
    pub holds: Option<bool>,
    pub steps: Vec<FiberStep>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum AlexanderStep {
    Declared {
        knot: String,
        alexander: NormalForm,
    },
    Cabling {
        knot: String,
        braid: BraidWord,
        pattern_alexander: NormalForm,
        companion: String,
        winding: i64,
        result: NormalForm,
    },
}

impl AlexanderStep {
    fn knot(&self) -> &str {
        match self {
            AlexanderStep::Declared { knot, .. } | AlexanderStep::Cabling { knot, .. } => knot,
        }
    }

    fn result(&self) -> &NormalForm {
        match self {
            AlexanderStep::Declared { alexander, .. } => alexander,
            AlexanderStep::Cabling { result, .. } => result,
        }
    }
}

/// Primality of a companion, which the satellite rule needs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeStep {
    pub knot: String,
    pub prime: Option<bool>,
    pub nontrivial: bool,
    /// Set when primality comes from fiberedness plus this irreducibility
    /// verdict on the knot's Alexander polynomial.
    pub irreducibility: Option<IrredVerdict>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusStep {
    pub knot: String,
    pub companion_genus: u64,
    pub winding: i64,
    pub pattern_genus: u64,
    pub genus: u64,
    /// `g(J) < g(K)`, checked when `Δ_P = 1` and `|w| ≥ 2`.
    pub strict: Option<bool>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AmphiTrace {
    /// Facts before saturation.
    pub input: FactBase,
    pub target: SymFact,
    /// Strongest −amphicheiral fact derived for the knot.
    pub derived: Option<SymFact>,
    pub derivation: Vec<String>,
    pub rules: Vec<String>,
    pub open: usize,
    pub contradictions: Vec<String>,
    pub refuted: Option<String>,
}

impl PartialEq for AmphiTrace {
    fn eq(&self, other: &Self) -> bool {
        self.target == other.target
            && self.derived == other.derived
            && self.derivation == other.derivation
            && self.rules == other.rules
            && self.open == other.open
            && self.contradictions == other.contradictions
            && self.refuted == other.refuted
            && serde_json::to_value(&self.input).ok() == serde_json::to_value(&other.input).ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(
    tag = "status",
    content = "reason",
    rename_all = "SCREAMING_SNAKE_CASE"
)]
pub enum Verdict {
    Miyazaki,
    NotMiyazaki(String),
    Inconclusive(String),
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Miyazaki => f.write_str("MIYAZAKI"),
            Verdict::NotMiyazaki(r) => write!(f, "NOT_MIYAZAKI({r})"),
            Verdict::Inconclusive(r) => write!(f, "INCONCLUSIVE({r})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub knot: String,
    pub fibered: FiberedEvidence,
    pub alexander: Vec<AlexanderStep>,
    pub delta: NormalForm,
    /// `None` when `Δ` is a unit.
    pub irreducibility: Option<IrredVerdict>,
    pub primality: Vec<PrimeStep>,
    pub amphicheiral: AmphiTrace,
    pub genus: Vec<GenusStep>,
    pub verdict: Verdict,
}

impl Certificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, PipelineError> {
        let mut c: Certificate =
            serde_json::from_str(text).map_err(|e| PipelineError::Descriptor(e.to_string()))?;
        c.amphicheiral.input.reindex();
        Ok(c)
    }
}

/// Everything gathered for one node of the satellite tree.
struct Node {
    name: String,
    delta: NormalForm,
    fibered: Option<bool>,
    prime: PrimeStep,
    genus: Option<u64>,
}

struct Builder<'a> {
    cfg: &'a IrredConfig,
    fiber_steps: Vec<FiberStep>,
    alex_steps: Vec<AlexanderStep>,
    prime_steps: Vec<PrimeStep>,
    genus_steps: Vec<GenusStep>,
    facts: FactBase,
}

fn irreducibility(
    delta: &NormalForm,
    cfg: &IrredConfig,
) -> Result<Option<IrredVerdict>, PipelineError> {
    let f = IntPoly::try_from(&delta.poly)?;
    match decide_irreducible(&f, cfg) {
        Ok(v) => Ok(Some(v)),
        Err(IrredError::Constant) => Ok(None),
        Err(e) => Err(PipelineError::Descriptor(format!("{}: {e}", delta.poly))),
    }
}

fn check_atomic(a: &Atomic) -> Result<NormalForm, PipelineError> {
    if !a.alexander.is_palindromic() || a.alexander.eval_at_one().magnitude() != &1u32.into() {
        return Err(PipelineError::Descriptor(format!(
            "{}: {} is not an Alexander polynomial",
            a.name, a.alexander
        )));
    }
    let delta = a.alexander.normalize_alexander()?;
    if a.fibered == Some(true) && delta.degree() != 2 * a.genus as i64 {
        return Err(PipelineError::GenusMismatch {
            knot: a.name.clone(),
            genus: a.genus,
            degree: delta.degree(),
        });
    }
    Ok(delta)
}

fn derived_prime(
    knot: &str,
    delta: &NormalForm,
    fibered: Option<bool>,
    cfg: &IrredConfig,
) -> Result<PrimeStep, PipelineError> {
    let nontrivial = !delta.poly.is_one();
    if fibered != Some(true) || !nontrivial {
        return Ok(PrimeStep {
            knot: knot.into(),
            prime: None,
            nontrivial,
            irreducibility: None,
        });
    }
    let v = irreducibility(delta, cfg)?;
    let prime = v
        .as_ref()
        .is_some_and(IrredVerdict::is_irreducible)
        .then_some(true);
    Ok(PrimeStep {
        knot: knot.into(),
        prime,
        nontrivial,
        irreducibility: v,
    })
}

impl Builder<'_> {
    fn visit(&mut self, d: &KnotDescriptor) -> Result<Node, PipelineError> {
        match d {
            KnotDescriptor::Atomic(a) => {
                let delta = check_atomic(a)?;
                self.fiber_steps.push(FiberStep::Declared {
                    knot: a.name.clone(),
                    fibered: a.fibered,
                });
                self.alex_steps.push(AlexanderStep::Declared {
                    knot: a.name.clone(),
                    alexander: delta.clone(),
                });
                let note = a.citations.join("; ");
                for s in &a.symmetries {
                    self.facts
                        .assert(SymFact::knot(&a.name, s.alpha, s.eps), note.clone());
                }
                for s in &a.non_symmetries {
                    self.facts
                        .assert_negative(SymFact::knot(&a.name, s.alpha, s.eps), note.clone());
                }
                if a.hyperbolic {
                    self.facts.mark_hyperbolic(&a.name);
                }
                let prime = match a.prime {
                    Some(p) => PrimeStep {
                        knot: a.name.clone(),
                        prime: Some(p),
                        nontrivial: !delta.poly.is_one() || a.genus > 0,
                        irreducibility: None,
                    },
                    None => derived_prime(&a.name, &delta, a.fibered, self.cfg)?,
                };
                Ok(Node {
                    name: a.name.clone(),
                    genus: (a.fibered == Some(true)).then_some(a.genus),
                    delta,
                    fibered: a.fibered,
                    prime,
                })
            }
            KnotDescriptor::Satellite { pattern, companion } => {
                let inner = self.visit(companion)?;
                let name = d.name();
                let pname = pattern.display_name();
                let p = pattern.resolve()?;
                let dp = p.braid.alexander_of_closure()?;
                let delta = satellite_alexander(&dp, &inner.delta, p.winding)?;
                self.alex_steps.push(AlexanderStep::Cabling {
                    knot: name.clone(),
                    braid: p.braid.clone(),
                    pattern_alexander: dp.clone(),
                    companion: inner.name.clone(),
                    winding: p.winding,
                    result: delta.clone(),
                });

                let homogeneous = p.braid.is_homogeneous();
                self.fiber_steps.push(FiberStep::Stallings {
                    knot: name.clone(),
                    braid: p.braid.clone(),
                    homogeneous,
                    companion: inner.name.clone(),
                });
                let fibered = stallings(inner.fibered, homogeneous);

                let genus = match (fibered, inner.genus) {
                    (Some(true), Some(gj)) => {
                        let g = fibered_genus(&delta)?;
                        let gp = fibered_genus(&dp)?;
                        self.genus_steps.push(GenusStep {
                            knot: name.clone(),
                            companion_genus: gj,
                            winding: p.winding,
                            pattern_genus: gp,
                            genus: g,
                            strict: (dp.poly.is_one() && p.winding.abs() >= 2).then_some(gj < g),
                        });
                        Some(g)
                    }
                    _ => None,
                };

                let unknotted = homogeneous && p.braid.bennequin_euler()?.genus == Some(0);
                self.facts.set_winding(&pname, p.winding);
                if let Some(f) = detect_rotational_antisymmetry(&p.braid, &pname) {
                    self.facts
                        .assert(f, format!("rotational antisymmetry of {}", p.braid));
                }
                self.facts.add_satellite(Satellite {
                    knot: name.clone(),
                    pattern: pname,
                    companion: inner.name.clone(),
                    hypothesis: unknotted
                        && inner.prime.prime == Some(true)
                        && inner.prime.nontrivial,
                });
                self.prime_steps.push(inner.prime);

                let prime = derived_prime(&name, &delta, fibered, self.cfg)?;
                Ok(Node {
                    name,
                    delta,
                    fibered,
                    prime,
                    genus,
                })
            }
        }
    }
}

fn stallings(companion: Option<bool>, homogeneous: bool) -> Option<bool> {
    match companion {
        Some(false) => Some(false),
        Some(true) if homogeneous => Some(true),
        _ => None,
    }
}

fn amphi_trace(input: FactBase, knot: &str) -> AmphiTrace {
    let target = SymFact::knot(knot, SymClass::Minus, Sign::Minus);
    let strong = SymFact::knot(knot, SymClass::JMinus, Sign::Minus);
    let sat = input.clone().saturate();
    let found = [&strong, &target]
        .into_iter()
        .find_map(|f| sat.position(f).map(|i| (f.clone(), i)));
    let (derived, derivation, rules) = match found {
        Some((f, i)) => (
            Some(f),
            sat.derivation(i),
            sat.rules_used(i).iter().map(|r| r.to_string()).collect(),
        ),
        None => (None, Vec::new(), Vec::new()),
    };
    let refuted = sat
        .negatives()
        .iter()
        .find(|(f, _)| *f == target)
        .map(|(f, note)| {
            if note.is_empty() {
                format!("declared {f} absent")
            } else {
                format!("declared {f} absent ({note})")
            }
        });
    AmphiTrace {
        target,
        derived,
        derivation,
        rules,
        open: sat.open_disjunctions().len(),
        contradictions: sat
            .contradictions()
            .iter()
            .map(|c| c.reason.clone())
            .collect(),
        refuted,
        input,
    }
}

/// The verdict as a function of the evidence alone. Disproofs come first,
/// then the first missing piece of evidence.
pub fn evaluate(c: &Certificate) -> Verdict {
    if c.fibered.holds == Some(false) {
        return Verdict::NotMiyazaki("not fibered".into());
    }
    match &c.irreducibility {
        None => return Verdict::NotMiyazaki("Alexander polynomial is a unit".into()),
        Some(IrredVerdict::Reducible { factor }) => {
            return Verdict::NotMiyazaki(format!("Alexander polynomial has the factor {factor}"))
        }
        _ => {}
    }
    if let Some(r) = &c.amphicheiral.refuted {
        return Verdict::NotMiyazaki(format!("not -amphicheiral: {r}"));
    }
    if c.fibered.holds.is_none() {
        return Verdict::Inconclusive("fiberedness not established".into());
    }
    if matches!(c.irreducibility, Some(IrredVerdict::Unknown { .. })) {
        return Verdict::Inconclusive("irreducibility undecided".into());
    }
    if !c.amphicheiral.contradictions.is_empty() {
        return Verdict::Inconclusive("symmetry facts are inconsistent".into());
    }
    if c.amphicheiral.derived.is_none() {
        return Verdict::Inconclusive("-amphicheirality not derived".into());
    }
    Verdict::Miyazaki
}

pub fn certify_with(k: &KnotDescriptor, cfg: &IrredConfig) -> Result<Certificate, PipelineError> {
    let mut b = Builder {
        cfg,
        fiber_steps: Vec::new(),
        alex_steps: Vec::new(),
        prime_steps: Vec::new(),
        genus_steps: Vec::new(),
        facts: FactBase::new(),
    };
    let top = b.visit(k)?;
    let irreducibility = match top.prime.irreducibility.clone() {
        Some(v) => Some(v),
        None => irreducibility(&top.delta, cfg)?,
    };
    let mut c = Certificate {
        amphicheiral: amphi_trace(b.facts, &top.name),
        knot: top.name,
        fibered: FiberedEvidence {
            holds: top.fibered,
            steps: b.fiber_steps,
        },
        alexander: b.alex_steps,
        delta: top.delta,
        irreducibility,
        primality: b.prime_steps,
        genus: b.genus_steps,
        verdict: Verdict::Inconclusive(String::new()),
    };
    c.verdict = evaluate(&c);
    Ok(c)
}

/// Certifies `k` with the default irreducibility bounds.
pub fn certify_miyazaki(k: &KnotDescriptor) -> Result<Certificate, PipelineError> {
    certify_with(k, &IrredConfig::default())
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), PipelineError> {
    if ok {
        Ok(())
    } else {
        Err(PipelineError::Replay(msg()))
    }
}

/// Re-checks every field of a stored certificate without the descriptor and
/// returns the verdict the evidence supports. Fails if any field does not
/// check or the stored verdict differs.
pub fn replay(c: &Certificate) -> Result<Verdict, PipelineError> {
    // Alexander chain: Burau on each pattern, cabling on each step.
    let lookup = |name: &str, upto: usize| -> Option<&NormalForm> {
        c.alexander[..upto]
            .iter()
            .rev()
            .find(|s| s.knot() == name)
            .map(AlexanderStep::result)
    };
    for (i, s) in c.alexander.iter().enumerate() {
        match s {
            AlexanderStep::Declared { knot, alexander } => {
                let p = &alexander.poly;
                ensure(
                    p.is_palindromic() && p.eval_at_one().magnitude() == &1u32.into(),
                    || format!("{knot}: declared Δ is not an Alexander polynomial"),
                )?;
            }
            AlexanderStep::Cabling {
                knot,
                braid,
                pattern_alexander,
                companion,
                winding,
                result,
            } => {
                ensure(braid.alexander_of_closure()? == *pattern_alexander, || {
                    format!("{knot}: pattern Alexander polynomial does not match its braid")
                })?;
                ensure(*winding == braid.strands() as i64, || {
                    format!("{knot}: winding")
                })?;
                let dj = lookup(companion, i)
                    .ok_or_else(|| PipelineError::Replay(format!("{companion} missing")))?;
                ensure(
                    satellite_alexander(pattern_alexander, dj, *winding)? == *result,
                    || format!("{knot}: cabling formula"),
                )?;
            }
        }
    }
    ensure(
        c.alexander.last().map(AlexanderStep::result) == Some(&c.delta),
        || "final Alexander polynomial".into(),
    )?;

    // Fiberedness chain.
    let mut holds: Option<bool> = None;
    for s in &c.fibered.steps {
        holds = match s {
            FiberStep::Declared { fibered, .. } => *fibered,
            FiberStep::Stallings {
                knot,
                braid,
                homogeneous,
                ..
            } => {
                ensure(braid.is_homogeneous() == *homogeneous, || {
                    format!("{knot}: homogeneity")
                })?;
                stallings(holds, *homogeneous)
            }
        };
    }
    ensure(holds == c.fibered.holds, || "fibered chain".into())?;

    // Irreducibility of Δ and of every companion used for primality.
    let f = IntPoly::try_from(&c.delta.poly)?;
    match &c.irreducibility {
        None => ensure(c.delta.poly.is_one(), || "Δ is not a unit".into())?,
        Some(v) => v.verify(&f).map_err(PipelineError::Replay)?,
    }
    for p in &c.primality {
        if let Some(v) = &p.irreducibility {
            let d = lookup(&p.knot, c.alexander.len())
                .ok_or_else(|| PipelineError::Replay(p.knot.clone()))?;
            v.verify(&IntPoly::try_from(&d.poly)?)
                .map_err(PipelineError::Replay)?;
            ensure(p.prime == v.is_irreducible().then_some(true), || {
                format!("{}: primality", p.knot)
            })?;
        }
    }

    // Genus ledger.
    for g in &c.genus {
        let d = lookup(&g.knot, c.alexander.len())
            .ok_or_else(|| PipelineError::Replay(g.knot.clone()))?;
        ensure(fibered_genus(d)? == g.genus, || {
            format!("{}: genus", g.knot)
        })?;
        ensure(
            g.genus == g.winding.unsigned_abs() * g.companion_genus + g.pattern_genus,
            || format!("{}: genus additivity", g.knot),
        )?;
    }

    // Symmetry: saturate the stored input again.
    let mut input = c.amphicheiral.input.clone();
    input.reindex();
    let again = amphi_trace(input, &c.knot);
    ensure(again == c.amphicheiral, || "symmetry derivation".into())?;

    let v = evaluate(c);
    ensure(v == c.verdict, || {
        format!("stored verdict {} but evidence gives {v}", c.verdict)
    })?;
    Ok(v)
}
