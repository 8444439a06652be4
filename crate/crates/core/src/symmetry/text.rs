use super::{
    detect_rotational_antisymmetry, FactBase, Satellite, Sign, SymClass, SymError, SymFact,
};
use crate::braid::BraidWord;

/// Parses a facts file into an unsaturated [`FactBase`].
///
/// ```text
/// # comment
/// knot J sym J- -1
/// knot T not -1 -1
/// knot J hyperbolic
/// pattern P sym J- -1 -1
/// pattern P winding 5
/// pattern P unknotted
/// pattern P braid 5: 4 -3 2 -1
/// link L sym -1 1 1
/// link L linking 3
/// satellite K = P(J) hypothesis
/// ```
///
/// `pattern P braid` records the winding number, runs the rotational
/// detector, and marks `P(U)` unknotted when the braid is homogeneous of
/// genus zero.
pub fn parse_facts(text: &str) -> Result<FactBase, SymError> {
    let mut fb = FactBase::new();
    for (no, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| SymError::Parse { line: no + 1, msg };
        let words: Vec<&str> = line.split_whitespace().collect();
        let note = format!("line {}", no + 1);
        match words.as_slice() {
            ["knot", name, "sym", a, e] => {
                let fact = SymFact::knot(*name, class(a).map_err(err)?, sign(e).map_err(err)?);
                fb.assert(fact, note);
            }
            ["knot", name, "not", a, e] => {
                let fact = SymFact::knot(*name, class(a).map_err(err)?, sign(e).map_err(err)?);
                fb.assert_negative(fact, note);
            }
            ["knot", name, "hyperbolic"] => fb.mark_hyperbolic(*name),
            ["pattern", name, "sym", a, e1, e2] => {
                let (a, e1, e2) = (class(a), sign(e1), sign(e2));
                let fact =
                    SymFact::pattern(*name, a.map_err(err)?, e1.map_err(err)?, e2.map_err(err)?);
                fb.assert(fact, note);
            }
            ["pattern", name, "not", a, e1, e2] => {
                let (a, e1, e2) = (class(a), sign(e1), sign(e2));
                let fact =
                    SymFact::pattern(*name, a.map_err(err)?, e1.map_err(err)?, e2.map_err(err)?);
                fb.assert_negative(fact, note);
            }
            ["pattern", name, "winding", w] => fb.set_winding(
                *name,
                w.parse().map_err(|_| err(format!("bad winding {w:?}")))?,
            ),
            ["pattern", name, "unknotted"] => fb.mark_unknotted(*name),
            ["pattern", name, "braid", ..] => {
                let spec = line
                    .splitn(4, char::is_whitespace)
                    .nth(3)
                    .unwrap_or("")
                    .trim();
                let braid: BraidWord = spec.parse().map_err(|e| err(format!("{e}")))?;
                if !braid.closure_is_knot() {
                    return Err(err("pattern braid must close to a knot".into()));
                }
                fb.set_winding(*name, braid.strands() as i64);
                if let Some(f) = detect_rotational_antisymmetry(&braid, name) {
                    fb.assert(f, format!("{note}, rotational detector on {braid}"));
                }
                if braid.bennequin_euler().ok().and_then(|s| s.genus) == Some(0) {
                    fb.mark_unknotted(*name);
                }
            }
            ["link", name, "sym", a, e1, e2] => {
                let (a, e1, e2) = (class(a), sign(e1), sign(e2));
                let fact =
                    SymFact::link(*name, a.map_err(err)?, e1.map_err(err)?, e2.map_err(err)?);
                fb.assert(fact, note);
            }
            ["link", name, "linking", lk] => fb.set_linking(
                *name,
                lk.parse()
                    .map_err(|_| err(format!("bad linking number {lk:?}")))?,
            ),
            ["satellite", knot, "=", app, rest @ ..] => {
                let (pattern, companion) = app
                    .strip_suffix(')')
                    .and_then(|s| s.split_once('('))
                    .ok_or_else(|| err(format!("expected P(J), got {app:?}")))?;
                let hypothesis = match rest {
                    [] => false,
                    ["hypothesis"] => true,
                    _ => return Err(err(format!("unexpected {:?}", rest.join(" ")))),
                };
                fb.add_satellite(Satellite {
                    knot: knot.to_string(),
                    pattern: pattern.to_string(),
                    companion: companion.to_string(),
                    hypothesis,
                });
            }
            _ => return Err(err(format!("unrecognized line {line:?}"))),
        }
    }
    Ok(fb)
}

fn class(s: &str) -> Result<SymClass, String> {
    s.parse()
}

fn sign(s: &str) -> Result<Sign, String> {
    s.parse()
}

#[cfg(test)]
mod tests {
    use super::*;
    use SymClass::*;

    #[test]
    fn parses_and_saturates() {
        let text = "
            # figure-eight companion, family pattern
            knot J sym J- -1
            pattern P braid 5: 4 -3 2 -1
            satellite K = P(J)
        ";
        let fb = parse_facts(text).unwrap().saturate();
        assert!(!fb.is_contradictory());
        assert!(fb.has(&SymFact::knot("K", JMinus, Sign::Minus)));
        assert!(fb.report().contains("satellite-forward"));
    }

    #[test]
    fn report_flags_contradiction() {
        let text = "pattern P sym -1 1 -1\npattern P winding 3\n";
        let fb = parse_facts(text).unwrap().saturate();
        assert!(fb.report().contains("CONTRADICTION"));
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(matches!(
            parse_facts("knot J sym Q -1"),
            Err(SymError::Parse { line: 1, .. })
        ));
        assert!(parse_facts("\n\nbogus").is_err());
        assert!(parse_facts("satellite K = PJ").is_err());
        assert!(parse_facts("pattern P braid 3: 1").is_err());
    }
}
