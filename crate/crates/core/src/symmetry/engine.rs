use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{
    associated_link_name, linking_obstruction, translate_link_pattern, translate_pattern_link,
    winding_obstruction, Consistency, Sign, SymClass, SymData, SymFact,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    Weakening,
    PatternToLink,
    LinkToPattern,
    SatelliteForward,
    SatelliteBackward,
    HyperbolicUpgrade,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::Weakening => "weakening",
            Rule::PatternToLink => "pattern-to-link",
            Rule::LinkToPattern => "link-to-pattern",
            Rule::SatelliteForward => "satellite-forward",
            Rule::SatelliteBackward => "satellite-backward",
            Rule::HyperbolicUpgrade => "hyperbolic-upgrade",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Origin {
    Asserted {
        note: String,
    },
    Derived {
        rule: Rule,
        premises: Vec<usize>,
        note: Option<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub fact: SymFact,
    pub origin: Origin,
}

/// `knot = pattern(companion)`. Hartley's satellite rule only fires when
/// `hypothesis` holds: the companion is nontrivial and prime and neither it
/// nor its mirror is a companion of `pattern(U)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Satellite {
    pub knot: String,
    pub pattern: String,
    pub companion: String,
    pub hypothesis: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Contradiction {
    pub reason: String,
    pub premises: Vec<usize>,
}

/// One case `J:(α, ε₁) ∧ P:([α, ε₁], ε)` of the backward satellite rule.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Branch {
    pub eps1: Sign,
    pub companion: SymFact,
    pub pattern: SymFact,
}

/// A backward derivation that case elimination could not resolve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disjunction {
    pub source: usize,
    pub branches: Vec<Branch>,
}

/// Forward satellite rule: `J:(α, ε₁)` and `P:([α, ε₁], ε)` give `P(J):(α, ε)`.
pub fn satellite_forward(
    sat: &Satellite,
    companion: &SymFact,
    pattern: &SymFact,
) -> Option<SymFact> {
    if !sat.hypothesis || companion.subject != sat.companion || pattern.subject != sat.pattern {
        return None;
    }
    match (companion.data, pattern.data) {
        (
            SymData::Knot { alpha: a, eps: e1 },
            SymData::Pattern {
                alpha: b,
                eps1,
                eps2,
            },
        ) if a == b && e1 == eps1 => Some(SymFact::knot(sat.knot.clone(), a, eps2)),
        _ => None,
    }
}

/// Backward satellite rule: `P(J):(α, ε)` gives the disjunction over
/// `ε₁ = ±1` of `J:(α, ε₁) ∧ P:([α, ε₁], ε)`.
pub fn satellite_backward(sat: &Satellite, knot: &SymFact) -> Option<[Branch; 2]> {
    if !sat.hypothesis || knot.subject != sat.knot {
        return None;
    }
    let SymData::Knot { alpha, eps } = knot.data else {
        return None;
    };
    Some(Sign::BOTH.map(|eps1| Branch {
        eps1,
        companion: SymFact::knot(sat.companion.clone(), alpha, eps1),
        pattern: SymFact::pattern(sat.pattern.clone(), alpha, eps1, eps),
    }))
}

/// Asserted facts, side conditions, and everything saturation derives.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct FactBase {
    entries: Vec<Entry>,
    #[serde(skip)]
    index: HashMap<SymFact, usize>,
    negatives: Vec<(SymFact, String)>,
    windings: BTreeMap<String, i64>,
    linkings: BTreeMap<String, i64>,
    satellites: Vec<Satellite>,
    hyperbolic: BTreeSet<String>,
    unknotted: BTreeSet<String>,
    contradictions: Vec<Contradiction>,
    open: Vec<Disjunction>,
}

impl FactBase {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn assert(&mut self, fact: SymFact, note: impl Into<String>) -> usize {
        self.insert(fact, Origin::Asserted { note: note.into() }).0
    }

    /// Declares that the subject does *not* have this symmetry.
    pub fn assert_negative(&mut self, fact: SymFact, note: impl Into<String>) {
        self.negatives.push((fact, note.into()));
    }

    pub fn set_winding(&mut self, pattern: impl Into<String>, w: i64) {
        self.windings.insert(pattern.into(), w);
    }

    pub fn set_linking(&mut self, link: impl Into<String>, lk: i64) {
        self.linkings.insert(link.into(), lk);
    }

    pub fn mark_hyperbolic(&mut self, knot: impl Into<String>) {
        self.hyperbolic.insert(knot.into());
    }

    /// An unknotted pattern satisfies the satellite hypothesis for every
    /// satellite it appears in.
    pub fn mark_unknotted(&mut self, pattern: impl Into<String>) {
        let p = pattern.into();
        for s in self.satellites.iter_mut().filter(|s| s.pattern == p) {
            s.hypothesis = true;
        }
        self.unknotted.insert(p);
    }

    pub fn add_satellite(&mut self, mut sat: Satellite) {
        sat.hypothesis |= self.unknotted.contains(&sat.pattern);
        self.satellites.push(sat);
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn contradictions(&self) -> &[Contradiction] {
        &self.contradictions
    }

    pub fn is_contradictory(&self) -> bool {
        !self.contradictions.is_empty()
    }

    pub fn open_disjunctions(&self) -> &[Disjunction] {
        &self.open
    }

    pub fn satellites(&self) -> &[Satellite] {
        &self.satellites
    }

    pub fn negatives(&self) -> &[(SymFact, String)] {
        &self.negatives
    }

    pub fn position(&self, fact: &SymFact) -> Option<usize> {
        self.index.get(fact).copied()
    }

    pub fn has(&self, fact: &SymFact) -> bool {
        self.index.contains_key(fact)
    }

    /// Facts about one subject, in derivation order.
    pub fn facts_about<'a>(&'a self, subject: &'a str) -> impl Iterator<Item = &'a SymFact> + 'a {
        self.entries
            .iter()
            .map(|e| &e.fact)
            .filter(move |f| f.subject == subject)
    }

    fn insert(&mut self, fact: SymFact, origin: Origin) -> (usize, bool) {
        if let Some(&i) = self.index.get(&fact) {
            return (i, false);
        }
        let i = self.entries.len();
        self.index.insert(fact.clone(), i);
        self.entries.push(Entry { fact, origin });
        (i, true)
    }

    fn derive(
        &mut self,
        fact: SymFact,
        rule: Rule,
        premises: Vec<usize>,
        note: Option<String>,
    ) -> bool {
        self.insert(
            fact,
            Origin::Derived {
                rule,
                premises,
                note,
            },
        )
        .1
    }

    fn contradict(&mut self, reason: String, premises: Vec<usize>) {
        if !self.contradictions.iter().any(|c| c.reason == reason) {
            self.contradictions.push(Contradiction { reason, premises });
        }
    }

    fn linking_of(&self, link: &str) -> Option<i64> {
        if let Some(lk) = self.linkings.get(link) {
            return Some(*lk);
        }
        // lk(μ_P, P(U)) is the winding number of P
        let pattern = link.strip_prefix("link(")?.strip_suffix(')')?;
        self.windings.get(pattern).copied()
    }

    /// Why a hypothetical fact cannot hold, if an obstruction or a declared
    /// negative fact rules it out.
    fn refutation(&self, fact: &SymFact) -> Option<String> {
        for g in fact.weakening_closure() {
            if let (
                SymData::Pattern {
                    alpha: SymClass::Minus,
                    ..
                },
                Some(&w),
            ) = (g.data, self.windings.get(&g.subject))
            {
                if winding_obstruction(&g, w) == Ok(Consistency::Contradiction) {
                    return Some(format!("winding obstruction on {g} with w={w}"));
                }
            }
            if let Some((_, note)) = self.negatives.iter().find(|(n, _)| *n == g) {
                return Some(format!("declared absent: {g} ({note})"));
            }
        }
        None
    }

    /// Applies weakening, the pattern/link correspondence, the hyperbolic
    /// upgrade, both directions of the satellite rule, and the obstructions
    /// until nothing new appears.
    pub fn saturate(mut self) -> Self {
        loop {
            let before = (
                self.entries.len(),
                self.contradictions.len(),
                self.open.len(),
            );
            self.local_rules();
            self.satellite_rules();
            self.check_obstructions();
            if before
                == (
                    self.entries.len(),
                    self.contradictions.len(),
                    self.open.len(),
                )
            {
                return self;
            }
        }
    }

    fn local_rules(&mut self) {
        let mut i = 0;
        while i < self.entries.len() {
            let fact = self.entries[i].fact.clone();
            if let Some(w) = fact.weaken() {
                self.derive(w, Rule::Weakening, vec![i], None);
            }
            match fact.data {
                SymData::Pattern { .. } => {
                    if let Ok(link) = translate_pattern_link(&fact) {
                        self.derive(link, Rule::PatternToLink, vec![i], None);
                    }
                }
                SymData::Link2 { .. } => {
                    if let Ok(p) = translate_link_pattern(&fact) {
                        self.derive(p, Rule::LinkToPattern, vec![i], None);
                    }
                }
                SymData::Knot { .. } => {
                    if fact.is_minus_amphicheiral() && self.hyperbolic.contains(&fact.subject) {
                        let strong =
                            SymFact::knot(fact.subject.clone(), SymClass::JMinus, Sign::Minus);
                        self.derive(
                            strong,
                            Rule::HyperbolicUpgrade,
                            vec![i],
                            Some(
                                "hyperbolic and -amphicheiral implies strongly -amphicheiral"
                                    .into(),
                            ),
                        );
                    }
                }
            }
            i += 1;
        }
    }

    fn satellite_rules(&mut self) {
        let sats = self.satellites.clone();
        for sat in sats.iter().filter(|s| s.hypothesis) {
            let snapshot: Vec<(usize, SymFact)> = self
                .entries
                .iter()
                .enumerate()
                .map(|(i, e)| (i, e.fact.clone()))
                .collect();
            for (ci, cf) in snapshot.iter().filter(|(_, f)| f.subject == sat.companion) {
                for (pi, pf) in snapshot.iter().filter(|(_, f)| f.subject == sat.pattern) {
                    if let Some(k) = satellite_forward(sat, cf, pf) {
                        self.derive(k, Rule::SatelliteForward, vec![*ci, *pi], None);
                    }
                }
            }
            for (ki, kf) in snapshot.iter().filter(|(_, f)| f.subject == sat.knot) {
                let Some(branches) = satellite_backward(sat, kf) else {
                    continue;
                };
                let mut alive = Vec::new();
                let mut notes = Vec::new();
                for b in branches {
                    let why = self
                        .refutation(&b.companion)
                        .or_else(|| self.refutation(&b.pattern));
                    match why {
                        Some(why) => notes.push(format!("eps1={} eliminated: {why}", b.eps1)),
                        None => alive.push(b),
                    }
                }
                match alive.len() {
                    0 => self.contradict(
                        format!(
                            "both cases of the satellite rule fail for {kf}: {}",
                            notes.join("; ")
                        ),
                        vec![*ki],
                    ),
                    1 => {
                        let b = alive.pop().unwrap();
                        let note = Some(notes.join("; "));
                        self.derive(
                            b.companion,
                            Rule::SatelliteBackward,
                            vec![*ki],
                            note.clone(),
                        );
                        self.derive(b.pattern, Rule::SatelliteBackward, vec![*ki], note);
                    }
                    _ => {
                        if !self.open.iter().any(|d| d.source == *ki) {
                            self.open.push(Disjunction {
                                source: *ki,
                                branches: alive,
                            });
                        }
                    }
                }
            }
        }
    }

    fn check_obstructions(&mut self) {
        for i in 0..self.entries.len() {
            let fact = self.entries[i].fact.clone();
            match fact.data {
                SymData::Pattern {
                    alpha: SymClass::Minus,
                    ..
                } => {
                    if let Some(&w) = self.windings.get(&fact.subject) {
                        if winding_obstruction(&fact, w) == Ok(Consistency::Contradiction) {
                            self.contradict(
                                format!("winding obstruction: {fact} with w={w}"),
                                vec![i],
                            );
                        }
                    }
                }
                SymData::Link2 {
                    alpha: SymClass::Minus,
                    ..
                } => {
                    if let Some(lk) = self.linking_of(&fact.subject) {
                        if linking_obstruction(&fact, lk) == Ok(Consistency::Contradiction) {
                            self.contradict(
                                format!("linking obstruction: {fact} with lk={lk}"),
                                vec![i],
                            );
                        }
                    }
                }
                _ => {}
            }
            if let Some((_, note)) = self.negatives.iter().find(|(n, _)| *n == fact) {
                let reason = format!("{fact} contradicts declared absence ({note})");
                self.contradict(reason, vec![i]);
            }
        }
    }

    /// The derivation tree of entry `i`, one line per step, premises first.
    pub fn derivation(&self, i: usize) -> Vec<String> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        self.walk(i, &mut seen, &mut out);
        out
    }

    fn walk(&self, i: usize, seen: &mut BTreeSet<usize>, out: &mut Vec<String>) {
        if !seen.insert(i) {
            return;
        }
        if let Origin::Derived { premises, .. } = &self.entries[i].origin {
            for &p in premises {
                self.walk(p, seen, out);
            }
        }
        out.push(self.describe(i));
    }

    /// Rules used anywhere in the derivation of entry `i`.
    pub fn rules_used(&self, i: usize) -> BTreeSet<Rule> {
        let mut out = BTreeSet::new();
        let mut stack = vec![i];
        let mut seen = BTreeSet::new();
        while let Some(j) = stack.pop() {
            if !seen.insert(j) {
                continue;
            }
            if let Origin::Derived { rule, premises, .. } = &self.entries[j].origin {
                out.insert(*rule);
                stack.extend(premises);
            }
        }
        out
    }

    pub fn describe(&self, i: usize) -> String {
        let e = &self.entries[i];
        match &e.origin {
            Origin::Asserted { note } if note.is_empty() => {
                format!("[{i}] {}  <- asserted", e.fact)
            }
            Origin::Asserted { note } => format!("[{i}] {}  <- asserted ({note})", e.fact),
            Origin::Derived {
                rule,
                premises,
                note,
            } => {
                let ps: Vec<String> = premises.iter().map(|p| p.to_string()).collect();
                let mut s = format!("[{i}] {}  <- {rule} [{}]", e.fact, ps.join(", "));
                if let Some(n) = note {
                    s.push_str(&format!(" ({n})"));
                }
                s
            }
        }
    }

    /// Human-readable listing of all facts with their immediate origins,
    /// followed by unresolved disjunctions and contradictions.
    pub fn report(&self) -> String {
        let mut out = String::new();
        for i in 0..self.entries.len() {
            out.push_str(&self.describe(i));
            out.push('\n');
        }
        for d in &self.open {
            let cases: Vec<String> = d
                .branches
                .iter()
                .map(|b| format!("({} and {})", b.companion, b.pattern))
                .collect();
            out.push_str(&format!(
                "OPEN from [{}]: {}\n",
                d.source,
                cases.join(" or ")
            ));
        }
        for c in &self.contradictions {
            let ps: Vec<String> = c.premises.iter().map(|p| p.to_string()).collect();
            out.push_str(&format!(
                "CONTRADICTION: {} [{}]\n",
                c.reason,
                ps.join(", ")
            ));
        }
        out
    }

    /// Rebuilds the lookup index after deserialization.
    pub fn reindex(&mut self) {
        self.index = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, e)| (e.fact.clone(), i))
            .collect();
    }

    pub fn associated_link(pattern: &str) -> String {
        associated_link_name(pattern)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use SymClass::*;

    const P: Sign = Sign::Plus;
    const M: Sign = Sign::Minus;

    fn sat() -> Satellite {
        Satellite {
            knot: "K".into(),
            pattern: "P".into(),
            companion: "J".into(),
            hypothesis: true,
        }
    }

    #[test]
    fn forward_examples() {
        let s = sat();
        let k = satellite_forward(
            &s,
            &SymFact::knot("J", JMinus, M),
            &SymFact::pattern("P", JMinus, M, M),
        );
        assert_eq!(k, Some(SymFact::knot("K", JMinus, M)));
        let k = satellite_forward(
            &s,
            &SymFact::knot("J", Plus, P),
            &SymFact::pattern("P", Plus, P, P),
        );
        assert_eq!(k, Some(SymFact::knot("K", Plus, P)));
        assert_eq!(
            satellite_forward(
                &s,
                &SymFact::knot("J", Plus, M),
                &SymFact::pattern("P", Plus, P, P)
            ),
            None
        );
        let no_hyp = Satellite {
            hypothesis: false,
            ..sat()
        };
        assert_eq!(
            satellite_forward(
                &no_hyp,
                &SymFact::knot("J", Plus, P),
                &SymFact::pattern("P", Plus, P, P)
            ),
            None
        );
    }

    #[test]
    fn backward_example() {
        let [a, b] = satellite_backward(&sat(), &SymFact::knot("K", Minus, M)).unwrap();
        assert_eq!(a.companion, SymFact::knot("J", Minus, P));
        assert_eq!(a.pattern, SymFact::pattern("P", Minus, P, M));
        assert_eq!(b.companion, SymFact::knot("J", Minus, M));
        assert_eq!(b.pattern, SymFact::pattern("P", Minus, M, M));
    }

    #[test]
    fn saturate_backward_resolves_companion() {
        let mut fb = FactBase::new();
        fb.assert(SymFact::knot("K", Minus, M), "");
        fb.set_winding("P", 5);
        fb.mark_unknotted("P");
        fb.add_satellite(Satellite {
            hypothesis: false,
            ..sat()
        });
        let fb = fb.saturate();
        assert!(!fb.is_contradictory());
        assert!(fb.has(&SymFact::knot("J", Minus, M)));
        assert!(fb.has(&SymFact::pattern("P", Minus, M, M)));
        assert!(!fb.has(&SymFact::knot("J", Minus, P)));
        assert!(fb.open_disjunctions().is_empty());
        let j = fb.position(&SymFact::knot("J", Minus, M)).unwrap();
        assert!(fb.rules_used(j).contains(&Rule::SatelliteBackward));
    }

    #[test]
    fn backward_without_winding_stays_open() {
        let mut fb = FactBase::new();
        fb.assert(SymFact::knot("K", Minus, M), "");
        fb.add_satellite(sat());
        let fb = fb.saturate();
        assert_eq!(fb.open_disjunctions().len(), 1);
        assert!(!fb.has(&SymFact::knot("J", Minus, M)));
    }

    #[test]
    fn soundness_of_case_elimination() {
        for alpha in [Minus, JMinus] {
            for eps in Sign::BOTH {
                for w in [2, 3, -4] {
                    let mut fb = FactBase::new();
                    let k = SymFact::knot("K", alpha, eps);
                    fb.assert(k.clone(), "");
                    fb.set_winding("P", w);
                    fb.add_satellite(sat());
                    let fb = fb.saturate();
                    if fb.is_contradictory() {
                        continue;
                    }
                    let comps: Vec<_> = fb
                        .facts_about("J")
                        .filter(|f| f.data.alpha() == alpha)
                        .cloned()
                        .collect();
                    if comps.len() == 1 {
                        // re-derive forward from the resolved branch alone
                        let pats: Vec<_> = fb
                            .facts_about("P")
                            .filter(|f| f.data.alpha() == alpha)
                            .cloned()
                            .collect();
                        let mut fresh = FactBase::new();
                        fresh.assert(comps[0].clone(), "");
                        fresh.assert(pats[0].clone(), "");
                        fresh.add_satellite(sat());
                        assert!(fresh.saturate().has(&k));
                    }
                }
            }
        }
    }

    #[test]
    fn forward_chain_with_weakening() {
        let mut fb = FactBase::new();
        fb.assert(SymFact::knot("J", JMinus, M), "figure-eight");
        fb.assert(SymFact::pattern("P", JMinus, M, M), "detector");
        fb.set_winding("P", 5);
        fb.add_satellite(sat());
        let fb = fb.saturate();
        assert!(!fb.is_contradictory());
        assert!(fb.has(&SymFact::knot("K", JMinus, M)));
        assert!(fb.has(&SymFact::knot("K", Minus, M)));
        assert!(fb.has(&SymFact::link("link(P)", JMinus, P, M)));
    }

    #[test]
    fn obstructions_raise_contradiction() {
        let mut fb = FactBase::new();
        fb.assert(SymFact::pattern("P", Minus, P, M), "");
        fb.set_winding("P", 3);
        assert!(fb.saturate().is_contradictory());

        let mut fb = FactBase::new();
        fb.assert(SymFact::link("L", Minus, P, P), "");
        fb.set_linking("L", 3);
        assert!(fb.saturate().is_contradictory());

        let mut fb = FactBase::new();
        fb.assert(SymFact::knot("T", JMinus, M), "");
        fb.assert_negative(SymFact::knot("T", Minus, M), "torus knot");
        assert!(fb.saturate().is_contradictory());
    }

    #[test]
    fn empty_base_is_vacuous() {
        let fb = FactBase::new().saturate();
        assert!(fb.entries().is_empty());
        assert!(!fb.is_contradictory());
    }

    #[test]
    fn hyperbolic_upgrade() {
        let mut fb = FactBase::new();
        fb.assert(SymFact::knot("J", Minus, M), "");
        fb.mark_hyperbolic("J");
        let fb = fb.saturate();
        assert!(fb.has(&SymFact::knot("J", JMinus, M)));
    }
}
