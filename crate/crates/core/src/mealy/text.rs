//! Line-based automaton files.
//!
//! ```text
//! alphabet 3
//! state a: 0->1 e, 1->0 a, 2->2 e
//! state g: 0->0 g, 1->1 e, 2->2 a
//! ```
//!
//! `#` starts a comment. The identity state `e` may be written out, in which
//! case it must act trivially.

use std::collections::HashMap;

use super::{MealyAutomaton, MealyState};
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::word::is_identifier;

struct RawState {
    line: usize,
    name: String,
    moves: Vec<(usize, usize, String)>,
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_move(line: usize, text: &str) -> Result<(usize, usize, String)> {
    let (arrow, next) = text
        .trim()
        .split_once(char::is_whitespace)
        .ok_or_else(|| err(line, format!("expected `<in>-><out> <next>`, got `{}`", text.trim())))?;
    let (i, o) = arrow
        .split_once("->")
        .ok_or_else(|| err(line, format!("missing `->` in `{arrow}`")))?;
    let i = i
        .parse()
        .map_err(|_| err(line, format!("bad input letter `{i}`")))?;
    let o = o
        .parse()
        .map_err(|_| err(line, format!("bad output letter `{o}`")))?;
    let next = next.trim();
    if !is_identifier(next) {
        return Err(err(line, format!("bad state name `{next}`")));
    }
    Ok((i, o, next.to_string()))
}

pub fn parse(text: &str) -> Result<MealyAutomaton> {
    let mut alphabet: Option<usize> = None;
    let mut raw: Vec<RawState> = Vec::new();
    for (k, full) in text.lines().enumerate() {
        let line = k + 1;
        let body = full.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        if alphabet.is_none() {
            let m = body
                .strip_prefix("alphabet")
                .filter(|r| r.starts_with(char::is_whitespace))
                .ok_or_else(|| err(line, "expected `alphabet <m>`"))?
                .trim()
                .parse::<usize>()
                .map_err(|_| err(line, "bad alphabet size"))?;
            if m == 0 {
                return Err(err(line, "alphabet must be non-empty"));
            }
            alphabet = Some(m);
            continue;
        }
        let rest = body
            .strip_prefix("state")
            .filter(|r| r.starts_with(char::is_whitespace))
            .ok_or_else(|| err(line, "expected `state <name>: ...`"))?;
        let (name, moves) = rest
            .split_once(':')
            .ok_or_else(|| err(line, "missing `:` after state name"))?;
        let name = name.trim();
        if !is_identifier(name) {
            return Err(err(line, format!("bad state name `{name}`")));
        }
        let moves = moves
            .split(',')
            .map(|t| parse_move(line, t))
            .collect::<Result<Vec<_>>>()?;
        raw.push(RawState {
            line,
            name: name.to_string(),
            moves,
        });
    }
    let m = alphabet.ok_or_else(|| err(1, "missing `alphabet <m>` line"))?;

    let mut index: HashMap<&str, usize> = HashMap::new();
    for r in raw.iter().filter(|r| r.name != "e") {
        let id = index.len();
        if index.insert(r.name.as_str(), id).is_some() {
            return Err(err(r.line, format!("duplicate state `{}`", r.name)));
        }
    }

    let mut states = Vec::new();
    let mut seen_e = false;
    for r in &raw {
        let mut out = vec![None; m];
        let mut next = vec![None; m];
        for (i, o, t) in &r.moves {
            if *i >= m || *o >= m {
                return Err(err(r.line, format!("letter out of range in `{i}->{o}`")));
            }
            if out[*i].is_some() {
                return Err(err(r.line, format!("letter {i} given twice")));
            }
            out[*i] = Some(*o);
            next[*i] = if t == "e" {
                None
            } else {
                Some(
                    *index
                        .get(t.as_str())
                        .ok_or_else(|| err(r.line, format!("undeclared state `{t}`")))?,
                )
            };
        }
        let out: Vec<usize> = out
            .into_iter()
            .enumerate()
            .map(|(y, o)| o.ok_or_else(|| err(r.line, format!("letter {y} missing"))))
            .collect::<Result<_>>()?;
        let output =
            Perm::from_images(out).map_err(|_| Error::NotInvertible(r.name.clone()))?;
        if r.name == "e" {
            if seen_e {
                return Err(err(r.line, "duplicate state `e`"));
            }
            seen_e = true;
            if !output.is_identity() || next.iter().any(Option::is_some) {
                return Err(err(r.line, "state `e` must be the identity"));
            }
            continue;
        }
        states.push(MealyState {
            name: r.name.clone(),
            output,
            next,
        });
    }
    MealyAutomaton::new(m, states)
}

fn move_list(a: &MealyAutomaton, output: &Perm, next: &[Option<usize>]) -> String {
    (0..a.alphabet_size())
        .map(|y| {
            let t = next[y].map_or("e", |t| a.states()[t].name.as_str());
            format!("{y}->{} {t}", output.image(y))
        })
        .collect::<Vec<_>>()
        .join(", ")
}

/// Canonical text; always writes the identity state first.
pub fn emit(a: &MealyAutomaton) -> String {
    let m = a.alphabet_size();
    let mut s = format!("alphabet {m}\n");
    s.push_str(&format!(
        "state e: {}\n",
        move_list(a, &Perm::identity(m), &vec![None; m])
    ));
    for q in a.states() {
        s.push_str(&format!("state {}: {}\n", q.name, move_list(a, &q.output, &q.next)));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mealy::{builtin, Builtin};

    const DIAGRAM1: &str = "alphabet 3\n\
        state a: 0->1 e, 1->0 a, 2->2 e\n\
        state g: 0->0 g, 1->1 e, 2->2 a\n";

    fn mealy(name: &str) -> MealyAutomaton {
        match builtin(name).unwrap() {
            Builtin::Mealy(a) => a,
            Builtin::Machine(_) => panic!("{name} is not a Mealy automaton"),
        }
    }

    #[test]
    fn parses_diagram1() {
        let a = parse(DIAGRAM1).unwrap();
        assert_eq!(a.states().len(), 2);
        assert_eq!(a, mealy("diagram1"));
    }

    #[test]
    fn identity_only_emits_two_lines() {
        let a = MealyAutomaton::new(2, vec![]).unwrap();
        let text = emit(&a);
        assert_eq!(text, "alphabet 2\nstate e: 0->0 e, 1->1 e\n");
        assert_eq!(parse(&text).unwrap(), a);
    }

    #[test]
    fn round_trips() {
        for name in ["adding", "diagram1", "diagram3", "brunner_sidki", "diagram2(4)", "prop31(2,2)"] {
            let a = mealy(name);
            let text = emit(&a);
            assert_eq!(parse(&text).unwrap(), a, "{name}");
            assert_eq!(emit(&parse(&text).unwrap()), text);
        }
    }

    #[test]
    fn comments_and_forward_references() {
        let a = parse("# odometer\nalphabet 2 # binary\n\nstate a: 0->1 e, 1->0 a\n").unwrap();
        assert_eq!(a, mealy("adding"));
        assert!(parse("alphabet 2\nstate a: 0->0 b, 1->1 e\nstate b: 0->1 e, 1->0 e\n").is_ok());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse("alphabet 2\nstate a: 0->1 e\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e}");
        let e = parse("alphabet 2\n\nstate a: 0->1 e, 1->0 q\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e}");
        let e = parse("alfabet 2\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }), "{e}");
        let e = parse("alphabet 2\nstate a: 0->0 e, 1->0 e\n").unwrap_err();
        assert_eq!(e, Error::NotInvertible("a".into()));
        let e = parse("alphabet 2\nstate e: 0->1 e, 1->0 e\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e}");
        assert!(parse("").is_err());
    }
}
