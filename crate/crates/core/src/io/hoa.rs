//! A narrow fragment of the Hanoi Omega-Automata format: deterministic,
//! complete, state-based parity or Büchi acceptance, with one atomic
//! proposition per letter and every edge labelled by a one-hot valuation.

use std::fmt::Write as _;

use crate::alphabet::Alphabet;
use crate::automaton::{Acceptance, OmegaAutomaton, Priority};
use crate::error::{Error, Result};
use crate::stateset::StateSet;
use crate::ts::{State, TransitionSystem};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// `Inf`/`Fin` formula for a parity condition over sets `0..k`, where a
/// run is accepting iff the largest set seen infinitely often has parity
/// `good`.
fn parity_formula(k: usize, good: usize) -> String {
    let atom = |i: usize| if i % 2 == good { format!("Inf({i})") } else { format!("Fin({i})") };
    let mut f = atom(0);
    for i in 1..k {
        let inner = if i == 1 { f } else { format!("({f})") };
        let op = if i % 2 == good { "|" } else { "&" };
        f = format!("{} {op} {inner}", atom(i));
    }
    f
}

/// Exports `a`. Parity automata whose least priority is odd are shifted down
/// by one and declared `parity max odd`.
pub fn export_hoa(a: &OmegaAutomaton) -> String {
    let ts = a.ts();
    let sigma = ts.alphabet();
    let m = sigma.len();
    let mut out = String::new();
    let _ = writeln!(out, "HOA: v1");
    let _ = writeln!(out, "States: {}", ts.size());
    let _ = writeln!(out, "Start: {}", ts.initial());
    let aps: Vec<String> = sigma.symbols().iter().map(|s| quote(s)).collect();
    let _ = writeln!(out, "AP: {m} {}", aps.join(" "));
    let labels: Vec<Option<Priority>> = match a.acceptance() {
        Acceptance::Parity(p) => {
            let min = p.iter().copied().min().unwrap_or(0);
            let shift = min % 2;
            let k = (p.iter().copied().max().unwrap_or(0) - shift + 1) as usize;
            let (name, good) = if shift == 0 { ("even", 0) } else { ("odd", 1) };
            let _ = writeln!(out, "acc-name: parity max {name} {k}");
            let _ = writeln!(out, "Acceptance: {k} {}", parity_formula(k, good));
            p.iter().map(|&v| Some(v - shift)).collect()
        }
        Acceptance::Buchi { accepting, .. } => {
            let _ = writeln!(out, "acc-name: Buchi");
            let _ = writeln!(out, "Acceptance: 1 Inf(0)");
            ts.states().map(|q| accepting.contains(q).then_some(0)).collect()
        }
    };
    let weak = a.is_weak_flagged();
    let _ = writeln!(
        out,
        "properties: trans-labels explicit-labels state-acc deterministic complete{}",
        if weak { " weak" } else { "" }
    );
    let _ = writeln!(out, "--BODY--");
    for q in ts.states() {
        let acc = labels[q].map(|s| format!(" {{{s}}}")).unwrap_or_default();
        let _ = writeln!(out, "State: {q} {}{acc}", quote(ts.name(q)));
        for l in sigma.letters() {
            let label: Vec<String> = (0..m).map(|i| if i == l { i.to_string() } else { format!("!{i}") }).collect();
            let _ = writeln!(out, "[{}] {}", label.join("&"), ts.succ(q, l));
        }
    }
    let _ = writeln!(out, "--END--");
    out
}

/// Splits a header value into tokens, keeping quoted strings whole.
fn tokens(s: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c == '"' {
            chars.next();
            let mut tok = String::new();
            loop {
                match chars.next() {
                    Some('\\') => tok.extend(chars.next()),
                    Some('"') => break,
                    Some(ch) => tok.push(ch),
                    None => return Err(Error::parse(0, "unterminated string")),
                }
            }
            out.push(format!("\"{tok}"));
        } else {
            let mut tok = String::new();
            while let Some(&ch) = chars.peek() {
                if ch.is_whitespace() || ch == '"' {
                    break;
                }
                tok.push(ch);
                chars.next();
            }
            out.push(tok);
        }
    }
    Ok(out)
}

fn unquote(tok: &str) -> Option<&str> {
    tok.strip_prefix('"')
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Cond {
    Parity { odd: bool, sets: usize },
    Buchi,
}

/// Parses the fragment written by [`export_hoa`]. Anything outside it is
/// rejected with [`Error::Unsupported`] naming the feature.
pub fn import_hoa(text: &str) -> Result<OmegaAutomaton> {
    let unsupported = |f: &str| Error::Unsupported(f.to_string());
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
    let mut n: Option<usize> = None;
    let mut start: Option<State> = None;
    let mut aps: Option<Vec<String>> = None;
    let mut cond: Option<Cond> = None;
    let mut weak = false;
    let mut in_body = false;
    for (no, line) in lines.by_ref() {
        if line == "--BODY--" {
            in_body = true;
            break;
        }
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| Error::parse(no, format!("expected a header, found {line:?}")))?;
        let toks = tokens(value).map_err(|_| Error::parse(no, "unterminated string"))?;
        let num = |t: Option<&String>| -> Result<usize> {
            t.and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::parse(no, format!("expected a number in {line:?}")))
        };
        match key.trim() {
            "HOA" => {
                if toks.first().map(String::as_str) != Some("v1") {
                    return Err(unsupported("HOA versions other than v1"));
                }
            }
            "States" => n = Some(num(toks.first())?),
            "Start" => {
                if value.contains('&') {
                    return Err(unsupported("alternation"));
                }
                if start.is_some() {
                    return Err(unsupported("multiple initial states"));
                }
                start = Some(num(toks.first())?);
            }
            "AP" => {
                let count = num(toks.first())?;
                let names: Vec<String> = toks[1..]
                    .iter()
                    .map(|t| unquote(t).map(str::to_string))
                    .collect::<Option<_>>()
                    .ok_or_else(|| Error::parse(no, "AP names must be quoted"))?;
                if names.len() != count {
                    return Err(Error::parse(no, format!("AP declares {count} names but lists {}", names.len())));
                }
                aps = Some(names);
            }
            "acc-name" => {
                let words: Vec<&str> = toks.iter().map(String::as_str).collect();
                cond = Some(match words.as_slice() {
                    ["Buchi"] => Cond::Buchi,
                    ["parity", "max", parity, k] if *parity == "even" || *parity == "odd" => Cond::Parity {
                        odd: *parity == "odd",
                        sets: k.parse().map_err(|_| Error::parse(no, "bad parity set count"))?,
                    },
                    ["parity", "min", ..] => return Err(unsupported("min-parity acceptance")),
                    _ => return Err(unsupported(&format!("acceptance {}", value.trim()))),
                });
            }
            "Acceptance" => {}
            "properties" => {
                for p in &toks {
                    match p.as_str() {
                        "univ-branch" => return Err(unsupported("alternation")),
                        "trans-acc" => return Err(unsupported("transition-based acceptance")),
                        "implicit-labels" => return Err(unsupported("implicit labels")),
                        "weak" => weak = true,
                        _ => {}
                    }
                }
            }
            "Alias" => return Err(unsupported("aliases")),
            "name" | "tool" | "controllable-AP" => {}
            other if other.chars().next().is_some_and(char::is_lowercase) => {}
            other => return Err(unsupported(&format!("header {other}"))),
        }
    }
    if !in_body {
        return Err(Error::parse(0, "missing --BODY--"));
    }
    let n = n.ok_or_else(|| Error::parse(0, "missing States header"))?;
    let start = start.ok_or_else(|| Error::parse(0, "missing Start header"))?;
    let aps = aps.ok_or_else(|| Error::parse(0, "missing AP header"))?;
    let cond = cond.ok_or_else(|| unsupported("acceptance without acc-name"))?;
    let alphabet = Alphabet::new(aps.iter().cloned())?;
    let m = alphabet.len();

    let mut names = vec![None; n];
    let mut sets: Vec<Option<Priority>> = vec![None; n];
    let mut delta: Vec<Vec<Option<State>>> = vec![vec![None; m]; n];
    let mut current: Option<State> = None;
    let mut ended = false;
    for (no, line) in lines {
        if line == "--END--" {
            ended = true;
            break;
        }
        let perr = |msg: String| Error::parse(no, msg);
        if let Some(rest) = line.strip_prefix("State:") {
            let toks = tokens(rest).map_err(|_| perr("unterminated string".into()))?;
            let q: State = toks
                .first()
                .and_then(|t| t.parse().ok())
                .filter(|&q| q < n)
                .ok_or_else(|| perr("bad state number".into()))?;
            let mut rest_toks = toks[1..].iter().peekable();
            if let Some(name) = rest_toks.peek().and_then(|t| unquote(t)) {
                names[q] = Some(name.to_string());
                rest_toks.next();
            }
            let acc: String = rest_toks.map(String::as_str).collect::<Vec<_>>().join(" ");
            if !acc.is_empty() {
                let inner = acc
                    .strip_prefix('{')
                    .and_then(|a| a.strip_suffix('}'))
                    .ok_or_else(|| perr(format!("bad acceptance sets {acc:?}")))?;
                let ids: Vec<Priority> = inner
                    .split_whitespace()
                    .map(|t| t.parse().map_err(|_| perr(format!("bad set {t:?}"))))
                    .collect::<Result<_>>()?;
                if ids.len() > 1 {
                    return Err(unsupported("states in several acceptance sets"));
                }
                sets[q] = ids.first().copied();
            }
            current = Some(q);
            continue;
        }
        let q = current.ok_or_else(|| perr("edge before any State line".into()))?;
        let label = line
            .strip_prefix('[')
            .and_then(|l| l.split_once(']'))
            .ok_or_else(|| unsupported("implicit labels"))?;
        let (label, target) = (label.0.trim(), label.1.trim());
        if target.contains('{') {
            return Err(unsupported("transition-based acceptance"));
        }
        if target.contains('&') {
            return Err(unsupported("alternation"));
        }
        let to: State = target
            .parse()
            .ok()
            .filter(|&t| t < n)
            .ok_or_else(|| perr(format!("bad edge target {target:?}")))?;
        let letter = one_hot(label, m).ok_or_else(|| unsupported("labels other than one-hot valuations"))?;
        if delta[q][letter].replace(to).is_some() {
            return Err(unsupported("nondeterminism"));
        }
    }
    if !ended {
        return Err(Error::parse(0, "missing --END--"));
    }
    let table: Vec<Vec<State>> = delta
        .into_iter()
        .map(|row| row.into_iter().collect::<Option<Vec<_>>>())
        .collect::<Option<_>>()
        .ok_or_else(|| unsupported("incomplete automata"))?;
    let names = names
        .into_iter()
        .enumerate()
        .map(|(q, name)| name.unwrap_or_else(|| format!("q{q}")))
        .collect();
    let ts = TransitionSystem::new(alphabet, names, start, table)?;
    match cond {
        Cond::Buchi => {
            let acc = StateSet::from_states(n, (0..n).filter(|&q| sets[q] == Some(0)));
            if weak {
                OmegaAutomaton::weak_buchi(ts, acc)
            } else {
                OmegaAutomaton::buchi(ts, acc)
            }
        }
        Cond::Parity { odd, sets: k } => {
            let shift = Priority::from(odd);
            let prios = sets
                .iter()
                .enumerate()
                .map(|(q, s)| match s {
                    Some(s) if (*s as usize) < k => Ok(s + shift),
                    Some(s) => Err(Error::parse(0, format!("state {q} uses set {s} beyond {k}"))),
                    None => Err(unsupported("parity states without a priority")),
                })
                .collect::<Result<_>>()?;
            OmegaAutomaton::parity(ts, prios)
        }
    }
}

/// The index of the single positive proposition in a conjunction that
/// mentions every proposition exactly once.
fn one_hot(label: &str, m: usize) -> Option<usize> {
    let mut seen = vec![false; m];
    let mut positive = None;
    for lit in label.split('&').map(str::trim) {
        let (neg, id) = match lit.strip_prefix('!') {
            Some(id) => (true, id.trim()),
            None => (false, lit),
        };
        let id: usize = id.parse().ok().filter(|&i| i < m)?;
        if std::mem::replace(&mut seen[id], true) {
            return None;
        }
        if !neg && positive.replace(id).is_some() {
            return None;
        }
    }
    if seen.iter().all(|&s| s) {
        positive
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn round_trips() {
        let mut shifted = fixtures::four_priority_dpa();
        shifted = OmegaAutomaton::parity(shifted.ts().clone(), vec![0, 0, 1, 2]).unwrap();
        for a in [
            fixtures::four_priority_dpa(),
            shifted,
            fixtures::dba_a(),
            fixtures::learning_h3(),
        ] {
            let text = export_hoa(&a);
            assert_eq!(import_hoa(&text).unwrap(), a, "{text}");
        }
    }

    #[test]
    fn header_counts_sets() {
        let a = OmegaAutomaton::parity(fixtures::four_priority_dpa().ts().clone(), vec![0, 0, 1, 2]).unwrap();
        let text = export_hoa(&a);
        assert!(text.contains("acc-name: parity max even 3"), "{text}");
        assert!(text.contains("Acceptance: 3 Inf(2) | (Fin(1) & Inf(0))"), "{text}");
        let odd = export_hoa(&fixtures::four_priority_dpa());
        assert!(odd.contains("acc-name: parity max odd 4"), "{odd}");
    }

    #[test]
    fn rejects_features_outside_the_fragment() {
        let base = export_hoa(&fixtures::learning_h3());
        let alt = base.replace("Start: 0", "Start: 0&1");
        assert_eq!(import_hoa(&alt).unwrap_err(), Error::Unsupported("alternation".into()));
        let trans = base.replacen("] 1\n", "] 1 {0}\n", 1);
        assert_eq!(
            import_hoa(&trans).unwrap_err(),
            Error::Unsupported("transition-based acceptance".into())
        );
        let label = base.replacen("[0&!1]", "[0]", 1);
        assert!(matches!(import_hoa(&label).unwrap_err(), Error::Unsupported(_)));
        let dup = base.replacen("[!0&1]", "[0&!1]", 1);
        assert_eq!(import_hoa(&dup).unwrap_err(), Error::Unsupported("nondeterminism".into()));
    }
}
