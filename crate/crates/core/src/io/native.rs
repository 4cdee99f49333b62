use std::fmt::Write as _;

use crate::alphabet::Alphabet;
use crate::automaton::{Acceptance, OmegaAutomaton, Priority};
use crate::error::{Error, Result};
use crate::stateset::StateSet;
use crate::ts::{State, TransitionSystem};

/// Options for [`parse_native_with`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct NativeOptions {
    /// Complete missing transitions with self-loops instead of failing.
    pub complete_with_selfloop: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Parity,
    Buchi,
    WeakBuchi,
}

/// Parses the line-oriented native format:
///
/// ```text
/// # comment
/// alphabet: a b
/// states: 2
/// initial: 0
/// acceptance: parity        # or buchi, weak-buchi
/// name 0 q0                 # optional, default q<i>
/// prio 0 1                  # parity: one per state
/// acc 1                     # buchi: accepting states
/// trans 0 a 1
/// ```
pub fn parse_native(text: &str) -> Result<OmegaAutomaton> {
    parse_native_with(text, NativeOptions::default())
}

pub fn parse_native_with(text: &str, options: NativeOptions) -> Result<OmegaAutomaton> {
    let mut alphabet: Option<Alphabet> = None;
    let mut n: Option<usize> = None;
    let mut initial: Option<State> = None;
    let mut kind: Option<Kind> = None;
    let mut names: Vec<Option<String>> = Vec::new();
    let mut prios: Vec<Option<Priority>> = Vec::new();
    let mut acc: Vec<bool> = Vec::new();
    let mut delta: Vec<Vec<Option<State>>> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| Error::parse(line_no, msg);
        if let Some((key, value)) = line.split_once(':') {
            let value = value.trim();
            match key.trim() {
                "alphabet" => {
                    alphabet = Some(Alphabet::new(value.split_whitespace()).map_err(|e| err(e.to_string()))?)
                }
                "states" => {
                    let count: usize = value.parse().map_err(|_| err(format!("bad state count {value:?}")))?;
                    if count == 0 {
                        return Err(err("an automaton needs at least one state".into()));
                    }
                    n = Some(count);
                    names = vec![None; count];
                    prios = vec![None; count];
                    acc = vec![false; count];
                    delta = Vec::new();
                }
                "initial" => initial = Some(value.parse().map_err(|_| err(format!("bad initial state {value:?}")))?),
                "acceptance" => {
                    kind = Some(match value {
                        "parity" => Kind::Parity,
                        "buchi" => Kind::Buchi,
                        "weak-buchi" => Kind::WeakBuchi,
                        other => return Err(err(format!("unknown acceptance {other:?}"))),
                    })
                }
                other => return Err(err(format!("unknown header {other:?}"))),
            }
            continue;
        }
        let mut parts = line.split_whitespace();
        let keyword = parts.next().unwrap_or_default();
        let count = n.ok_or_else(|| err("'states:' must come before state lines".into()))?;
        let state = |tok: Option<&str>| -> Result<State> {
            let tok = tok.ok_or_else(|| err("missing state index".into()))?;
            let q: State = tok.parse().map_err(|_| err(format!("bad state index {tok:?}")))?;
            if q >= count {
                return Err(err(format!("state {q} out of range 0..{count}")));
            }
            Ok(q)
        };
        match keyword {
            "name" => {
                let q = state(parts.next())?;
                let label = line["name".len()..]
                    .trim_start()
                    .split_once(char::is_whitespace)
                    .map(|(_, l)| l.trim())
                    .filter(|l| !l.is_empty())
                    .ok_or_else(|| err("missing name".into()))?;
                names[q] = Some(label.to_string());
            }
            "prio" => {
                let q = state(parts.next())?;
                let tok = parts.next().ok_or_else(|| err("missing priority".into()))?;
                let p = tok.parse().map_err(|_| err(format!("bad priority {tok:?}")))?;
                if prios[q].replace(p).is_some_and(|old| old != p) {
                    return Err(err(format!("state {q} has two priorities")));
                }
            }
            "acc" => {
                let q = state(parts.next())?;
                acc[q] = true;
            }
            "trans" => {
                let alpha = alphabet
                    .as_ref()
                    .ok_or_else(|| err("'alphabet:' must come before transitions".into()))?;
                let from = state(parts.next())?;
                let sym = parts.next().ok_or_else(|| err("missing letter".into()))?;
                let a = alpha.index_of(sym).ok_or_else(|| err(format!("unknown letter {sym:?}")))?;
                let to = state(parts.next())?;
                if delta.is_empty() {
                    delta = vec![vec![None; alpha.len()]; count];
                }
                if delta[from][a].replace(to).is_some_and(|old| old != to) {
                    return Err(err(format!(
                        "nondeterministic: state {from} has two successors on {sym}"
                    )));
                }
            }
            other => return Err(err(format!("unknown line kind {other:?}"))),
        }
        if parts.next().is_some() && keyword != "name" {
            return Err(err("trailing tokens".into()));
        }
    }

    let missing_header = |h: &str| Error::parse(0, format!("missing '{h}:' header"));
    let alphabet = alphabet.ok_or_else(|| missing_header("alphabet"))?;
    let n = n.ok_or_else(|| missing_header("states"))?;
    let initial = initial.ok_or_else(|| missing_header("initial"))?;
    let kind = kind.ok_or_else(|| missing_header("acceptance"))?;
    if initial >= n {
        return Err(Error::parse(0, format!("initial state {initial} out of range")));
    }
    if delta.is_empty() {
        delta = vec![vec![None; alphabet.len()]; n];
    }
    let mut missing = Vec::new();
    let table: Vec<Vec<State>> = delta
        .iter()
        .enumerate()
        .map(|(q, row)| {
            row.iter()
                .enumerate()
                .map(|(a, t)| {
                    t.unwrap_or_else(|| {
                        missing.push(format!("({q}, {})", alphabet.symbol(a)));
                        q
                    })
                })
                .collect()
        })
        .collect();
    if !missing.is_empty() && !options.complete_with_selfloop {
        return Err(Error::InvalidArgument(format!(
            "incomplete transition function, missing: {}",
            missing.join(", ")
        )));
    }
    let names = names
        .into_iter()
        .enumerate()
        .map(|(q, name)| name.unwrap_or_else(|| format!("q{q}")))
        .collect();
    let ts = TransitionSystem::new(alphabet, names, initial, table)?;
    match kind {
        Kind::Parity => {
            if acc.iter().any(|&a| a) {
                return Err(Error::parse(0, "'acc' lines in a parity automaton"));
            }
            let prios: Vec<Priority> = prios
                .iter()
                .enumerate()
                .map(|(q, p)| p.ok_or_else(|| Error::parse(0, format!("state {q} has no priority"))))
                .collect::<Result<_>>()?;
            OmegaAutomaton::parity(ts, prios)
        }
        Kind::Buchi | Kind::WeakBuchi => {
            if prios.iter().any(Option::is_some) {
                return Err(Error::parse(0, "'prio' lines in a Büchi automaton"));
            }
            let set = StateSet::from_states(n, (0..n).filter(|&q| acc[q]));
            if kind == Kind::WeakBuchi {
                OmegaAutomaton::weak_buchi(ts, set)
            } else {
                OmegaAutomaton::buchi(ts, set)
            }
        }
    }
}

/// Prints `a` in the native format; [`parse_native`] inverts it.
pub fn print_native(a: &OmegaAutomaton) -> String {
    let ts = a.ts();
    let mut out = String::new();
    let _ = writeln!(out, "alphabet: {}", ts.alphabet().symbols().join(" "));
    let _ = writeln!(out, "states: {}", ts.size());
    let _ = writeln!(out, "initial: {}", ts.initial());
    let kind = match a.acceptance() {
        Acceptance::Parity(_) => "parity",
        Acceptance::Buchi { weak: true, .. } => "weak-buchi",
        Acceptance::Buchi { weak: false, .. } => "buchi",
    };
    let _ = writeln!(out, "acceptance: {kind}");
    for q in ts.states() {
        let _ = writeln!(out, "name {q} {}", ts.name(q));
    }
    match a.acceptance() {
        Acceptance::Parity(p) => {
            for q in ts.states() {
                let _ = writeln!(out, "prio {q} {}", p[q]);
            }
        }
        Acceptance::Buchi { accepting, .. } => {
            for q in accepting.iter() {
                let _ = writeln!(out, "acc {q}");
            }
        }
    }
    for q in ts.states() {
        for a in ts.alphabet().letters() {
            let _ = writeln!(out, "trans {q} {} {}", ts.alphabet().symbol(a), ts.succ(q, a));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn round_trip_fixtures() {
        for a in [
            fixtures::four_priority_dpa(),
            fixtures::dba_a(),
            fixtures::learning_h3(),
            fixtures::learning_dontcare(),
        ] {
            let text = print_native(&a);
            assert_eq!(parse_native(&text).unwrap(), a, "{text}");
        }
    }

    const FIG2_A: &str = "\
alphabet: a b c
states: 3
initial: 0
acceptance: ACC
acc 1
trans 0 a 2
trans 0 b 1
trans 0 c 1
trans 1 a 2
trans 1 b 0
trans 1 c 2
trans 2 a 2
trans 2 b 2
trans 2 c 1
";

    #[test]
    fn weakness_is_checked() {
        assert!(parse_native(&FIG2_A.replace("ACC", "buchi")).is_ok());
        let err = parse_native(&FIG2_A.replace("ACC", "weak-buchi")).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }

    #[test]
    fn missing_edges() {
        let text = print_native(&fixtures::four_priority_dpa()).replace("trans 3 b 3\n", "");
        let err = parse_native(&text).unwrap_err();
        assert!(err.to_string().contains("(3, b)"), "{err}");
        let repaired = parse_native_with(
            &text,
            NativeOptions {
                complete_with_selfloop: true,
            },
        )
        .unwrap();
        assert_eq!(repaired, fixtures::four_priority_dpa());
    }

    #[test]
    fn parse_errors_carry_lines() {
        let err = parse_native("alphabet: a\nstates: 1\nbogus 0\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 3,
                message: "unknown line kind \"bogus\"".into()
            }
        );
    }
}
