use super::{Sign, SymClass, SymFact};
use crate::braid::BraidWord;

/// Looks for the pattern symmetry `([J₋, −1], −1)` of a braid closure in
/// the solid torus, realized by `(z, θ) ↦ (−z, −θ)`.
///
/// On words this map reverses the letter order (θ ↦ −θ), relabels
/// `σ_i ↦ σ_{n−i}` (z ↦ −z), and flips every crossing sign (the map
/// reverses orientation). The symmetry is certified when the image is a
/// cyclic rotation of the original word. A `None` result is absence of a
/// certificate, never a proof of asymmetry.
pub fn detect_rotational_antisymmetry(braid: &BraidWord, subject: &str) -> Option<SymFact> {
    if !braid.closure_is_knot() {
        return None;
    }
    let n = braid.strands() as i32;
    let image: Vec<i32> = braid
        .letters()
        .iter()
        .rev()
        .map(|&l| -(l.signum() * (n - l.abs())))
        .collect();
    let word = braid.letters();
    let len = word.len();
    let hit = len == 0 || (0..len).any(|k| (0..len).all(|j| word[(j + k) % len] == image[j]));
    hit.then(|| SymFact::pattern(subject, SymClass::JMinus, Sign::Minus, Sign::Minus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::make_pattern_pn;

    fn found(s: &str) -> bool {
        detect_rotational_antisymmetry(&s.parse().unwrap(), "P").is_some()
    }

    #[test]
    fn detector_examples() {
        assert!(found("5: 4 -3 2 -1"));
        assert!(found("3: -1 2"));
        assert!(!found("3: 1 2"));
    }

    #[test]
    fn winding_three_trichotomy() {
        assert!(!found("3: 1 2"));
        assert!(!found("3: -1 -2"));
        assert!(found("3: -1 2"));
    }

    #[test]
    fn family_patterns_are_symmetric() {
        for n in 1..=25 {
            let p = make_pattern_pn(n).unwrap();
            let fact = detect_rotational_antisymmetry(&p.braid, "P").unwrap();
            assert_eq!(
                fact,
                SymFact::pattern("P", SymClass::JMinus, Sign::Minus, Sign::Minus)
            );
        }
    }

    #[test]
    fn invariant_under_rotation() {
        for s in [
            "5: 4 -3 2 -1",
            "3: -1 2",
            "3: 1 2",
            "4: 1 -2 3 -2 1",
            "7: 6 -5 4 -3 2 -1",
        ] {
            let w: BraidWord = s.parse().unwrap();
            let base = detect_rotational_antisymmetry(&w, "P").is_some();
            for k in 0..w.len() {
                assert_eq!(
                    detect_rotational_antisymmetry(&w.rotate(k), "P").is_some(),
                    base,
                    "{s} rot {k}"
                );
            }
        }
    }

    #[test]
    fn link_closures_get_nothing() {
        assert!(!found("3: 1"));
    }
}
