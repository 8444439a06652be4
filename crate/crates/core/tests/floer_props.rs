mod common;

use common::{floer_corpus, oracle_tau, oracle_upsilon, oracle_vk, sample_ts};
use knotcert::floer::{
    compute_vk, figure_eight_model, isomorphic, mirror, nu_plus, tau, tensor, unknot, upsilon,
    Complex, Rational64,
};
use num_traits::Signed;
use proptest::prelude::*;

const K_MAX: u32 = 4;

#[test]
fn invariants_match_brute_force() {
    for (name, c) in floer_corpus() {
        let v = compute_vk(&c, K_MAX).unwrap();
        let oracle: Vec<u64> = (0..=K_MAX as i64).map(|k| oracle_vk(&c, k)).collect();
        assert_eq!(v, oracle, "V_k of {name}");
        assert_eq!(tau(&c), oracle_tau(&c), "tau of {name}");
        for t in sample_ts() {
            assert_eq!(
                upsilon(&c, t).unwrap(),
                oracle_upsilon(&c, t),
                "Upsilon({t}) of {name}"
            );
        }
    }
}

#[test]
fn nu_plus_is_first_zero_of_nonincreasing_v() {
    for (name, c) in floer_corpus() {
        let v = compute_vk(&c, K_MAX).unwrap();
        assert!(
            v.windows(2).all(|w| w[0] >= w[1] && w[0] <= w[1] + 1),
            "{name}: {v:?}"
        );
        let first = v.iter().position(|&x| x == 0).unwrap() as u64;
        assert_eq!(nu_plus(&c).unwrap(), first, "{name}");
        assert!(
            nu_plus(&c).unwrap() as i64 <= c.top_alexander().max(0),
            "{name}"
        );
    }
}

#[test]
fn mirror_is_an_involution() {
    for (name, c) in floer_corpus() {
        assert!(isomorphic(&mirror(&mirror(&c)), &c), "{name}");
        assert!(isomorphic(&tensor(&c, &unknot()), &c), "{name}");
        assert_eq!(tau(&mirror(&c)), -tau(&c), "{name}");
    }
}

fn vanishing() -> Vec<Complex> {
    let t = common::load_complex("trefoil");
    vec![unknot(), figure_eight_model(), tensor(&t, &mirror(&t))]
}

#[test]
fn tensoring_with_vanishing_complex_keeps_v() {
    for z in vanishing() {
        assert!(compute_vk(&z, K_MAX).unwrap().iter().all(|&x| x == 0));
        assert!(compute_vk(&mirror(&z), K_MAX)
            .unwrap()
            .iter()
            .all(|&x| x == 0));
        for (name, d) in floer_corpus() {
            let v = compute_vk(&d, K_MAX).unwrap();
            assert_eq!(compute_vk(&tensor(&z, &d), K_MAX).unwrap(), v, "z ⊗ {name}");
            assert_eq!(
                compute_vk(&tensor(&mirror(&z), &d), K_MAX).unwrap(),
                v,
                "mirror(z) ⊗ {name}"
            );
        }
    }
}

fn upsilon_bound_holds(c: &Complex) -> Result<(), TestCaseError> {
    let bound = nu_plus(c).unwrap().max(nu_plus(&mirror(c)).unwrap()) as i64;
    for t in sample_ts() {
        let u = upsilon(c, t).unwrap();
        prop_assert!(
            u.abs() <= t * bound,
            "|Υ({})| = {} > {} · {}",
            t,
            u,
            t,
            bound
        );
    }
    Ok(())
}

#[test]
fn upsilon_bounded_by_nu_plus_on_corpus() {
    for (_, c) in floer_corpus() {
        upsilon_bound_holds(&c).unwrap();
    }
}

fn small_tensor() -> impl Strategy<Value = Complex> {
    let n = floer_corpus().len();
    (0..n, any::<bool>(), 0..n, any::<bool>()).prop_map(|(i, mi, j, mj)| {
        let corpus = floer_corpus();
        let pick = |k: usize, m: bool| {
            if m {
                mirror(&corpus[k].1)
            } else {
                corpus[k].1.clone()
            }
        };
        tensor(&pick(i, mi), &pick(j, mj))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn upsilon_bounded_by_nu_plus_on_tensors(c in small_tensor()) {
        upsilon_bound_holds(&c)?;
        let v = compute_vk(&c, K_MAX).unwrap();
        prop_assert!(v.windows(2).all(|w| w[0] >= w[1]));
        prop_assert_eq!(upsilon(&c, Rational64::new(0, 1)).unwrap(), Rational64::new(0, 1));
        prop_assert_eq!(upsilon(&c, Rational64::new(2, 1)).unwrap(), Rational64::new(0, 1));
    }

    #[test]
    fn tau_is_additive(i in 0usize..7, j in 0usize..7) {
        let corpus = floer_corpus();
        let (a, b) = (&corpus[i].1, &corpus[j].1);
        prop_assert_eq!(tau(&tensor(a, b)), tau(a) + tau(b));
        let half = Rational64::new(1, 2);
        prop_assert_eq!(
            upsilon(&tensor(a, b), half).unwrap(),
            upsilon(a, half).unwrap() + upsilon(b, half).unwrap()
        );
    }
}
