use super::{validate_complex, Complex, RawArrow, RawComplex, RawGenerator};

fn build(gens: &[(&str, i64, i64)], arrows: &[(&str, &str, u32)]) -> Complex {
    let raw = RawComplex {
        generators: gens
            .iter()
            .map(|&(name, alexander, maslov)| RawGenerator {
                name: name.into(),
                maslov,
                alexander,
            })
            .collect(),
        differential: arrows
            .iter()
            .map(|&(from, to, u)| RawArrow {
                from: from.into(),
                to: to.into(),
                u,
            })
            .collect(),
    };
    validate_complex(&raw).expect("built-in model is valid")
}

/// One generator in bigrading `(0, 0)`.
pub fn unknot() -> Complex {
    build(&[("x", 0, 0)], &[])
}

/// Right-handed trefoil: `∂b = c + U·a`.
pub fn trefoil() -> Complex {
    build(
        &[("a", 1, 0), ("b", 0, -1), ("c", -1, -2)],
        &[("b", "c", 0), ("b", "a", 1)],
    )
}

/// Figure-eight knot: an unknot generator plus an acyclic box.
pub fn figure_eight_model() -> Complex {
    build(
        &[
            ("e", 0, 0),
            ("p", 0, 0),
            ("q", -1, -1),
            ("r", 1, 1),
            ("s", 0, 0),
        ],
        &[("p", "q", 0), ("p", "r", 1), ("q", "s", 1), ("r", "s", 0)],
    )
}

/// Staircase complex with the given step lengths, alternating horizontal
/// and vertical, starting horizontally from the top generator `x0`.
/// `[1, 1]` is the trefoil, `[1, 1, 1, 1]` is `T(2,5)`, `[1, 2, 2, 1]` is
/// `T(3,4)`.
pub fn staircase(steps: &[u32]) -> Complex {
    assert!(
        steps.len().is_multiple_of(2),
        "staircase needs an even number of steps"
    );
    let genus: i64 = steps.iter().map(|&s| s as i64).sum::<i64>() / 2;
    let mut gens = vec![("x0".to_string(), genus, 0i64)];
    let mut arrows = Vec::new();
    for (k, &s) in steps.iter().enumerate() {
        let (_, a, m) = gens[k].clone();
        let name = format!("x{}", k + 1);
        if k % 2 == 0 {
            // x_{k+1} -> U^s x_k
            gens.push((name.clone(), a - s as i64, m - 2 * s as i64 + 1));
            arrows.push((name, format!("x{k}"), s));
        } else {
            // x_k -> x_{k+1}, a vertical arrow of length s
            gens.push((name.clone(), a - s as i64, m - 1));
            arrows.push((format!("x{k}"), name, 0));
        }
    }
    let g: Vec<(&str, i64, i64)> = gens.iter().map(|(n, a, m)| (n.as_str(), *a, *m)).collect();
    let ar: Vec<(&str, &str, u32)> = arrows
        .iter()
        .map(|(f, t, u)| (f.as_str(), t.as_str(), *u))
        .collect();
    build(&g, &ar)
}
