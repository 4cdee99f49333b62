//! Small hand-built automata used throughout the documentation, examples and
//! tests: the priority-optimization DPA, the three-state DBA with several
//! don't-care-minimal variants, the worked learning example and its
//! hypotheses, and the standard tail-language don't-care sets.

use crate::alphabet::Alphabet;
use crate::automaton::OmegaAutomaton;
use crate::hardness::Graph;
use crate::stateset::StateSet;
use crate::ts::TransitionSystem;

fn ts(alphabet: &Alphabet, names: &[&str], rows: &[&[usize]]) -> TransitionSystem {
    TransitionSystem::new(
        alphabet.clone(),
        names.iter().map(|s| s.to_string()).collect(),
        0,
        rows.iter().map(|r| r.to_vec()).collect(),
    )
    .expect("fixture transition system")
}

fn set(n: usize, states: &[usize]) -> StateSet {
    StateSet::from_states(n, states.iter().copied())
}

pub fn ab() -> Alphabet {
    Alphabet::from_chars("ab").unwrap()
}

pub fn abc() -> Alphabet {
    Alphabet::from_chars("abc").unwrap()
}

/// Four-state DPA over `{a,b}` with priorities 1,2,3,4; `q3` loops on `b`.
pub fn four_priority_dpa() -> OmegaAutomaton {
    let t = ts(
        &ab(),
        &["q0", "q1", "q2", "q3"],
        &[&[0, 1], &[2, 0], &[1, 3], &[1, 3]],
    );
    OmegaAutomaton::parity(t, vec![1, 2, 3, 4]).unwrap()
}

/// `Σ*·letterω`: words that eventually consist of `letter` only.
/// Two states, "last letter was `letter`" (priority 0) or not (priority 1).
pub fn dontcare_eventually(alphabet: &Alphabet, letter: &str) -> OmegaAutomaton {
    let l = alphabet.index_of(letter).expect("letter in alphabet");
    let row: Vec<usize> = alphabet.letters().map(|a| usize::from(a == l)).collect();
    let t = TransitionSystem::new(
        alphabet.clone(),
        vec!["other".into(), letter.to_string()],
        0,
        vec![row.clone(), row],
    )
    .unwrap();
    OmegaAutomaton::parity(t, vec![1, 0]).unwrap()
}

/// `(Σ*·letter)ω`: words with infinitely many occurrences of `letter`.
pub fn dontcare_infinitely(alphabet: &Alphabet, letter: &str) -> OmegaAutomaton {
    let l = alphabet.index_of(letter).expect("letter in alphabet");
    let row: Vec<usize> = alphabet.letters().map(|a| usize::from(a == l)).collect();
    let t = TransitionSystem::new(
        alphabet.clone(),
        vec!["other".into(), letter.to_string()],
        0,
        vec![row.clone(), row],
    )
    .unwrap();
    OmegaAutomaton::parity(t, vec![1, 2]).unwrap()
}

/// `Σ*aω` over `{a,b}`.
pub fn eventually_a() -> OmegaAutomaton {
    dontcare_eventually(&ab(), "a")
}

/// `Σ*bω` over the given alphabet.
pub fn dontcare_suffix_b(alphabet: &Alphabet) -> OmegaAutomaton {
    dontcare_eventually(alphabet, "b")
}

/// Three-state DBA over `{a,b,c}` with informative right-congruence.
pub fn dba_a() -> OmegaAutomaton {
    let t = ts(
        &abc(),
        &["q0", "q1", "q2"],
        &[&[2, 1, 1], &[2, 0, 2], &[2, 2, 1]],
    );
    OmegaAutomaton::buchi(t, set(3, &[1])).unwrap()
}

/// "Infinitely many c": a two-state DBA whose language has trivial
/// right-congruence.
pub fn dba_b() -> OmegaAutomaton {
    let t = ts(&abc(), &["q0", "q1"], &[&[0, 0, 1], &[0, 0, 0]]);
    OmegaAutomaton::buchi(t, set(2, &[1])).unwrap()
}

pub fn dba_c() -> OmegaAutomaton {
    let t = ts(&abc(), &["q0", "q1"], &[&[0, 0, 1], &[0, 1, 0]]);
    OmegaAutomaton::buchi(t, set(2, &[1])).unwrap()
}

pub fn dba_d() -> OmegaAutomaton {
    let t = ts(&abc(), &["q0", "q1"], &[&[0, 0, 1], &[0, 1, 1]]);
    OmegaAutomaton::buchi(t, set(2, &[1])).unwrap()
}

/// The graph `({v1,v2,v3}, {(v1,v2),(v1,v3)})`.
pub fn star_graph() -> Graph {
    Graph::new(["v1", "v2", "v3"], [("v1", "v2"), ("v1", "v3")]).unwrap()
}

/// Exact WDBA over `{a,b}` for `U = abω + baω + (ab)ω`.
pub fn learning_target() -> OmegaAutomaton {
    let t = ts(
        &ab(),
        &["ε", "a", "b", "ab", "abb", "ba", "aba", "abab", "sink"],
        &[
            &[1, 2],
            &[8, 3],
            &[5, 8],
            &[6, 4],
            &[8, 4],
            &[5, 8],
            &[8, 7],
            &[6, 8],
            &[8, 8],
        ],
    );
    OmegaAutomaton::weak_buchi(t, set(9, &[4, 5, 6, 7])).unwrap()
}

/// `Σ*bω` over `{a,b}`, the don't-care set of the worked learning run.
pub fn learning_dontcare() -> OmegaAutomaton {
    dontcare_suffix_b(&ab())
}

/// First hypothesis transition system of the worked learning run.
pub fn learning_h1() -> TransitionSystem {
    ts(&ab(), &["ε", "b"], &[&[0, 1], &[1, 0]])
}

/// Second hypothesis, accepting `{b}`.
pub fn learning_h2() -> OmegaAutomaton {
    let t = ts(&ab(), &["ε", "a", "b"], &[&[1, 2], &[1, 1], &[2, 1]]);
    OmegaAutomaton::weak_buchi(t, set(3, &[2])).unwrap()
}

/// Final hypothesis, accepting `{a, b, ab}`.
pub fn learning_h3() -> OmegaAutomaton {
    let t = ts(
        &ab(),
        &["ε", "a", "b", "aa", "ab"],
        &[&[1, 2], &[3, 4], &[2, 3], &[3, 3], &[1, 3]],
    );
    OmegaAutomaton::weak_buchi(t, set(5, &[1, 2, 4])).unwrap()
}

/// `H3` with its rejecting sink split into two states alternating on `a`.
pub fn learning_h3_split() -> OmegaAutomaton {
    let t = ts(
        &ab(),
        &["ε", "a", "b", "aa", "ab", "aa'"],
        &[&[1, 2], &[3, 4], &[2, 3], &[5, 3], &[1, 3], &[3, 3]],
    );
    OmegaAutomaton::weak_buchi(t, set(6, &[1, 2, 4])).unwrap()
}
