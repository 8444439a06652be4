use knotcert::braid::BraidWord;
use knotcert::par::Exec;
use knotcert::pipeline::{
    certify_miyazaki, family_descriptor, figure_eight, replay, scan_family, Certificate,
    KnotDescriptor, PatternSpec, Verdict,
};
use knotcert::LaurentPoly;
use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;

/// `t^{2W} − 3t^W + 1` for the total winding `W`.
fn expected_delta(total_winding: i64) -> LaurentPoly {
    let w = total_winding.abs();
    LaurentPoly::from_terms([(0, 1), (w, -3), (2 * w, 1)])
}

fn iterated(ns: &[i64]) -> KnotDescriptor {
    ns.iter().rev().fold(figure_eight(), |j, &n| {
        KnotDescriptor::satellite(PatternSpec::family(n), j)
    })
}

#[test]
fn scan_rows_are_alexander_polynomials_of_the_right_genus() {
    for r in scan_family(30, Exec::Parallel).unwrap() {
        let d: LaurentPoly = r.alexander.parse().unwrap();
        assert!(d.is_palindromic(), "n = {}", r.n);
        assert_eq!(d.eval_at_one().abs(), BigInt::from(1), "n = {}", r.n);
        assert_eq!(d, expected_delta(2 * r.n + 1), "n = {}", r.n);
        assert_eq!(d.span(), 2 * (2 * r.n + 1));
    }
}

fn check_replay(c: &Certificate) -> Result<(), TestCaseError> {
    prop_assert_eq!(
        &replay(c).map_err(|e| TestCaseError::fail(e.to_string()))?,
        &c.verdict
    );
    let text = c.to_json();
    let back = Certificate::from_json(&text).unwrap();
    prop_assert_eq!(&back, c);
    prop_assert_eq!(back.to_json(), text);
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn iterated_satellites_of_the_figure_eight(ns in prop::collection::vec(1i64..=4, 1..=3)) {
        let d = iterated(&ns);
        let c = certify_miyazaki(&d).unwrap();
        let w: i64 = ns.iter().map(|n| 2 * n + 1).product();
        prop_assert_eq!(c.delta.poly.clone(), expected_delta(w).normalize_alexander().unwrap().poly);
        prop_assert_eq!(c.genus.last().unwrap().genus as i64, w);
        prop_assert!(c.genus.iter().all(|g| g.strict == Some(true)));
        prop_assert_eq!(&c.verdict, &Verdict::Miyazaki);
        check_replay(&c)?;
        let again = certify_miyazaki(&d).unwrap();
        prop_assert_eq!(again.to_json(), c.to_json());
    }

    #[test]
    fn arbitrary_patterns_replay_to_their_verdict(
        letters in prop::collection::vec(prop::sample::select(vec![1i32, -1, 2, -2]), 1..7),
    ) {
        let b = BraidWord::new(3, letters).unwrap();
        prop_assume!(b.closure_is_knot());
        let d = KnotDescriptor::satellite(PatternSpec::braid(b), figure_eight());
        match certify_miyazaki(&d) {
            Ok(c) => check_replay(&c)?,
            Err(e) => prop_assert!(false, "{}", e),
        }
    }
}

#[test]
fn family_certificates_replay() {
    for n in [1, 2, 5, 12] {
        let c = certify_miyazaki(&family_descriptor(n)).unwrap();
        assert_eq!(c.verdict, Verdict::Miyazaki);
        assert_eq!(replay(&c).unwrap(), Verdict::Miyazaki);
        assert_eq!(Certificate::from_json(&c.to_json()).unwrap(), c);
    }
}
