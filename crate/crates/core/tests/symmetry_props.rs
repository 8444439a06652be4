use std::collections::BTreeSet;

use knotcert::braid::BraidWord;
use knotcert::symmetry::{
    detect_rotational_antisymmetry, linking_obstruction, translate_link_pattern,
    translate_pattern_link, winding_obstruction, Consistency, FactBase, Satellite, Sign, SymClass,
    SymData, SymFact,
};
use proptest::prelude::*;

fn sign() -> impl Strategy<Value = Sign> {
    prop::sample::select(Sign::BOTH.to_vec())
}

fn class() -> impl Strategy<Value = SymClass> {
    prop::sample::select(vec![
        SymClass::Plus,
        SymClass::Minus,
        SymClass::JPlus,
        SymClass::JMinus,
    ])
}

fn fact() -> impl Strategy<Value = SymFact> {
    (
        0..3usize,
        prop::sample::select(vec!["K", "J", "P"]),
        class(),
        sign(),
        sign(),
    )
        .prop_map(|(kind, subject, a, e1, e2)| match kind {
            0 => SymFact::knot(subject, a, e1),
            1 => SymFact::pattern(subject, a, e1, e2),
            _ => SymFact::link(format!("link({subject})"), a, e1, e2),
        })
}

#[derive(Debug, Clone)]
struct Setup {
    facts: Vec<SymFact>,
    winding: Option<i64>,
    linking: Option<i64>,
    satellite: Option<bool>,
    hyperbolic: bool,
}

fn setup() -> impl Strategy<Value = Setup> {
    (
        prop::collection::vec(fact(), 0..6),
        prop::option::of(-3i64..=3),
        prop::option::of(-3i64..=3),
        prop::option::of(any::<bool>()),
        any::<bool>(),
    )
        .prop_map(|(facts, winding, linking, satellite, hyperbolic)| Setup {
            facts,
            winding,
            linking,
            satellite,
            hyperbolic,
        })
}

fn build(s: &Setup) -> FactBase {
    let mut fb = FactBase::new();
    for f in &s.facts {
        fb.assert(f.clone(), "given");
    }
    if let Some(w) = s.winding {
        fb.set_winding("P", w);
    }
    if let Some(lk) = s.linking {
        fb.set_linking("L", lk);
    }
    if let Some(hypothesis) = s.satellite {
        fb.add_satellite(Satellite {
            knot: "K".into(),
            pattern: "P".into(),
            companion: "J".into(),
            hypothesis,
        });
    }
    if s.hyperbolic {
        fb.mark_hyperbolic("J");
    }
    fb
}

fn fact_set(fb: &FactBase) -> BTreeSet<SymFact> {
    fb.entries().iter().map(|e| e.fact.clone()).collect()
}

fn reasons(fb: &FactBase) -> BTreeSet<String> {
    fb.contradictions()
        .iter()
        .map(|c| c.reason.clone())
        .collect()
}

/// The map `(z, θ) ↦ (−z, −θ)` on braid words.
fn antipode(word: &[i32], n: i32) -> Vec<i32> {
    word.iter()
        .rev()
        .map(|&l| -(l.signum() * (n - l.abs())))
        .collect()
}

fn braid_word(max_strands: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(|n| {
        let gens: Vec<i32> = (1..n as i32).flat_map(|i| [i, -i]).collect();
        prop::collection::vec(prop::sample::select(gens), 0..8)
            .prop_map(move |w| BraidWord::new(n, w).unwrap())
    })
}

proptest! {
    #[test]
    fn pattern_link_translation_roundtrips(a in class(), e1 in sign(), e2 in sign()) {
        let p = SymFact::pattern("P", a, e1, e2);
        match translate_pattern_link(&p) {
            Ok(l) => {
                prop_assert_ne!(a, SymClass::JPlus);
                prop_assert_eq!(&l.subject, "link(P)");
                prop_assert_eq!(translate_link_pattern(&l).unwrap(), p);
            }
            Err(_) => prop_assert_eq!(a, SymClass::JPlus),
        }
        let l = SymFact::link("link(P)", a, e1, e2);
        if let Ok(back) = translate_link_pattern(&l) {
            prop_assert_eq!(translate_pattern_link(&back).unwrap(), l);
        }
    }

    #[test]
    fn saturation_is_idempotent(s in setup()) {
        let once = build(&s).saturate();
        let twice = once.clone().saturate();
        prop_assert_eq!(fact_set(&once), fact_set(&twice));
        prop_assert_eq!(reasons(&once), reasons(&twice));
        prop_assert_eq!(once.open_disjunctions().len(), twice.open_disjunctions().len());
    }

    #[test]
    fn saturation_is_closed_and_monotone(s in setup(), extra in fact()) {
        let fb = build(&s).saturate();
        let facts = fact_set(&fb);
        for f in &s.facts {
            prop_assert!(facts.contains(f));
        }
        for f in &facts {
            for w in f.weakening_closure() {
                prop_assert!(facts.contains(&w), "{} present but not {}", f, w);
            }
            let translated = match f.data {
                SymData::Pattern { .. } => translate_pattern_link(f).ok(),
                SymData::Link2 { .. } => translate_link_pattern(f).ok(),
                SymData::Knot { .. } => None,
            };
            if let Some(t) = translated {
                prop_assert!(facts.contains(&t), "{} present but not {}", f, t);
            }
        }
        let mut more = s.clone();
        more.facts.push(extra);
        let bigger = build(&more).saturate();
        prop_assert!(facts.is_subset(&fact_set(&bigger)));
        prop_assert!(reasons(&fb).is_subset(&reasons(&bigger)));
    }

    #[test]
    fn forward_rule_fires_under_the_hypothesis(a in class(), e1 in sign(), e in sign()) {
        let mut fb = FactBase::new();
        fb.assert(SymFact::knot("J", a, e1), "companion");
        fb.assert(SymFact::pattern("P", a, e1, e), "pattern");
        fb.add_satellite(Satellite { knot: "K".into(), pattern: "P".into(), companion: "J".into(), hypothesis: true });
        let fb = fb.saturate();
        prop_assert!(fb.has(&SymFact::knot("K", a, e)));
    }

    #[test]
    fn winding_obstruction_matches_homology(e1 in sign(), e2 in sign(), w in -4i64..=4) {
        // the symmetry acts on H_1 of the solid torus by e1, and on the
        // oriented core class w by e2
        let obstructed = e1.as_i64() * w != e2.as_i64() * w;
        let f = SymFact::pattern("P", SymClass::Minus, e1, e2);
        let got = winding_obstruction(&f, w).unwrap() == Consistency::Contradiction;
        prop_assert_eq!(got, obstructed);
        let mut fb = FactBase::new();
        fb.assert(f, "given");
        fb.set_winding("P", w);
        let fb = fb.saturate();
        prop_assert_eq!(fb.contradictions().iter().any(|c| c.reason.contains("winding obstruction")), obstructed);
    }

    #[test]
    fn linking_obstruction_matches_orientation(e1 in sign(), e2 in sign(), lk in -4i64..=4) {
        // an orientation reversing map sends lk to -e1*e2*lk
        let obstructed = lk != -e1.as_i64() * e2.as_i64() * lk;
        let f = SymFact::link("L", SymClass::Minus, e1, e2);
        let got = linking_obstruction(&f, lk).unwrap() == Consistency::Contradiction;
        prop_assert_eq!(got, obstructed);
        let mut fb = FactBase::new();
        fb.assert(f, "given");
        fb.set_linking("L", lk);
        let fb = fb.saturate();
        prop_assert_eq!(fb.contradictions().iter().any(|c| c.reason.contains("linking obstruction")), obstructed);
    }

    #[test]
    fn detector_is_rotation_invariant(b in braid_word(5), k in 0usize..8) {
        let r = b.rotate(k);
        prop_assert_eq!(
            detect_rotational_antisymmetry(&b, "P").is_some(),
            detect_rotational_antisymmetry(&r, "P").is_some()
        );
    }

    #[test]
    fn words_built_symmetric_are_detected(b in braid_word(5)) {
        let n = b.strands();
        let half = BraidWord::new(n, antipode(b.letters(), n as i32)).unwrap();
        let w = b.concat(&half);
        prop_assume!(w.closure_is_knot());
        prop_assert_eq!(
            detect_rotational_antisymmetry(&w, "P"),
            Some(SymFact::pattern("P", SymClass::JMinus, Sign::Minus, Sign::Minus))
        );
    }
}
