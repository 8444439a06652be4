//! Brute-force reference computations shared by the integration tests.
//! Every homology question is answered by enumerating subsets, with no
//! linear algebra shared with the library.
#![allow(dead_code)]

use std::collections::HashSet;
use std::path::PathBuf;

use knotcert::floer::{mirror, staircase, Complex, Rational64};

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

pub fn load_complex(name: &str) -> Complex {
    let path = corpus_dir().join("floer").join(format!("{name}.json"));
    Complex::from_json(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// The shipped complexes plus `T(3,4)` and both trefoil sums.
pub fn floer_corpus() -> Vec<(String, Complex)> {
    let mut out: Vec<(String, Complex)> =
        ["unknot", "trefoil", "mirror_trefoil", "figure_eight", "t25"]
            .iter()
            .map(|n| (n.to_string(), load_complex(n)))
            .collect();
    out.push(("t34".into(), staircase(&[1, 2, 2, 1])));
    let t = load_complex("trefoil");
    out.push((
        "trefoil#mirror".into(),
        knotcert::floer::tensor(&t, &mirror(&t)),
    ));
    out
}

type Elem = (usize, i64);

/// `U^n x` of Maslov grading `g` satisfying `keep`.
fn slice(c: &Complex, g: i64, keep: impl Fn(usize, i64) -> bool) -> Vec<Elem> {
    c.generators()
        .iter()
        .enumerate()
        .filter_map(|(x, gen)| {
            let d = gen.maslov - g;
            (d % 2 == 0 && keep(x, d / 2)).then_some((x, d / 2))
        })
        .collect()
}

/// Boundary of the chain `mask` (over `from`) as a mask over `to`; arrows
/// leaving `to` are reported as `None`.
fn boundary(c: &Complex, from: &[Elem], mask: u64, to: &[Elem]) -> Option<u64> {
    let mut out = 0u64;
    for (i, &(x, n)) in from.iter().enumerate() {
        if mask >> i & 1 == 0 {
            continue;
        }
        for a in c.arrows().iter().filter(|a| a.from == x) {
            let target = (a.to, n + a.u as i64);
            let j = to.iter().position(|&e| e == target)?;
            out ^= 1 << j;
        }
    }
    Some(out)
}

fn all_boundaries(c: &Complex, above: &[Elem], here: &[Elem]) -> HashSet<u64> {
    assert!(above.len() <= 20, "slice too large for enumeration");
    (0..1u64 << above.len())
        .map(|m| boundary(c, above, m, here).unwrap())
        .collect()
}

/// Masks over `here` of the nonzero classes in `H_g(CFK^∞)` supported on
/// the sub-slice `sub` (indices into `here`).
fn essential_cycles(c: &Complex, g: i64, sub: &[usize]) -> Vec<u64> {
    let here = slice(c, g, |_, _| true);
    let below = slice(c, g - 1, |_, _| true);
    let above = slice(c, g + 1, |_, _| true);
    assert!(sub.len() <= 20, "slice too large for enumeration");
    let bounds = all_boundaries(c, &above, &here);
    (1..1u64 << sub.len())
        .map(|m| {
            sub.iter()
                .enumerate()
                .filter(|(i, _)| m >> i & 1 == 1)
                .fold(0u64, |acc, (_, &j)| acc | 1 << j)
        })
        .filter(|&z| boundary(c, &here, z, &below) == Some(0) && !bounds.contains(&z))
        .collect()
}

/// `V_k` from the subcomplex `A_k^- = C{i ≤ 0, j ≤ k}`: the top grading of
/// its `U`-tower is `−2V_k`.
pub fn oracle_vk(c: &Complex, k: i64) -> u64 {
    let top = c.generators().iter().map(|g| g.maslov).max().unwrap();
    let mut g = top - top.rem_euclid(2);
    let floor = g - 4 * (c.max_abs_alexander() + c.max_abs_maslov() + k + 2);
    while g >= floor {
        let here = slice(c, g, |_, _| true);
        let gens = c.generators();
        let sub: Vec<usize> = (0..here.len())
            .filter(|&i| {
                let (x, n) = here[i];
                n >= 0.max(gens[x].alexander - k)
            })
            .collect();
        if !sub.is_empty() && !essential_cycles(c, g, &sub).is_empty() {
            return (-g / 2) as u64;
        }
        g -= 2;
    }
    panic!("no tower found above grading {floor}");
}

/// `τ`: least Alexander level of a cycle of the hat complex nonzero in its
/// homology.
pub fn oracle_tau(c: &Complex) -> i64 {
    let n = c.len();
    assert!(n <= 20);
    let d = |m: u64| -> u64 {
        c.arrows()
            .iter()
            .filter(|a| a.u == 0 && m >> a.from & 1 == 1)
            .fold(0, |acc, a| acc ^ 1 << a.to)
    };
    let bounds: HashSet<u64> = (0..1u64 << n).map(d).collect();
    let level = |m: u64| {
        (0..n)
            .filter(|i| m >> i & 1 == 1)
            .map(|i| c.generators()[i].alexander)
            .max()
            .unwrap()
    };
    (1..1u64 << n)
        .filter(|&m| d(m) == 0 && !bounds.contains(&m))
        .map(level)
        .min()
        .expect("hat homology is nonzero")
}

/// `Υ(t) = −2 · min over essential grading-0 cycles z of max_{U^n x ∈ z} ((t/2)A(x) − n)`.
pub fn oracle_upsilon(c: &Complex, t: Rational64) -> Rational64 {
    let here = slice(c, 0, |_, _| true);
    let all: Vec<usize> = (0..here.len()).collect();
    essential_cycles(c, 0, &all)
        .into_iter()
        .map(|z| {
            (0..here.len())
                .filter(|i| z >> i & 1 == 1)
                .map(|i| {
                    let (x, n) = here[i];
                    t / 2 * c.generators()[x].alexander - n
                })
                .max()
                .unwrap()
        })
        .min()
        .map(|s| -s * 2)
        .expect("tower at grading 0")
}

pub fn sample_ts() -> Vec<Rational64> {
    [
        (0, 1),
        (1, 4),
        (1, 3),
        (1, 2),
        (2, 3),
        (1, 1),
        (3, 2),
        (2, 1),
    ]
    .iter()
    .map(|&(a, b)| Rational64::new(a, b))
    .collect()
}
