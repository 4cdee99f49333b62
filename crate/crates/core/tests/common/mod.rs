//! Helpers shared by the integration tests. Everything here is written
//! against the public API only and avoids the SCC and quotient code it is
//! used to check.

#![allow(dead_code)]

use std::collections::BTreeSet;

use omega_dontcare::{Alphabet, Letter, OmegaAutomaton, State, UpWord, Word};

/// All words over `alphabet` of length `lo..=hi`.
pub fn words(alphabet: &Alphabet, lo: usize, hi: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut layer: Vec<Word> = vec![Vec::new()];
    for len in 0..=hi {
        if len >= lo {
            out.extend(layer.iter().cloned());
        }
        layer = layer
            .iter()
            .flat_map(|w| {
                alphabet.letters().map(move |a| {
                    let mut w = w.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    out
}

/// All canonical UP words with spoke and cycle length at most `bound`.
pub fn upwords(alphabet: &Alphabet, bound: usize) -> Vec<UpWord> {
    let spokes = words(alphabet, 0, bound);
    let cycles = words(alphabet, 1, bound);
    let mut set = BTreeSet::new();
    for u in &spokes {
        for v in &cycles {
            set.insert(UpWord::new(u, v).unwrap());
        }
    }
    set.into_iter().collect()
}

fn run(a: &OmegaAutomaton, from: State, w: &[Letter]) -> State {
    w.iter().fold(from, |q, &l| a.ts().succ(q, l))
}

/// States `p`, `q` of a weak automaton accept the same language iff every
/// pair reachable from `(p, q)` that lies on a cycle agrees on acceptance:
/// a weak run's acceptance is that of any state it repeats.
pub fn weak_states_equivalent(a: &OmegaAutomaton, p: State, q: State) -> bool {
    let acc = a.accepting().expect("Büchi automaton");
    let k = a.alphabet().len();
    let succ = |(x, y): (State, State)| (0..k).map(move |l| (a.ts().succ(x, l), a.ts().succ(y, l)));
    let reach = |from: Vec<(State, State)>| {
        let mut seen: BTreeSet<(State, State)> = BTreeSet::new();
        let mut stack = from;
        while let Some(s) = stack.pop() {
            if seen.insert(s) {
                stack.extend(succ(s));
            }
        }
        seen
    };
    let reachable = reach(vec![(p, q)]);
    reachable.iter().all(|&s| {
        let on_cycle = reach(succ(s).collect()).contains(&s);
        !on_cycle || acc.contains(s.0) == acc.contains(s.1)
    })
}

/// Naive minimization of a weak automaton for `D = ∅`: merge language
/// equivalent states, keep the first state of each class. Returns the
/// successor table and the class of every state.
pub fn merge_minimize(a: &OmegaAutomaton) -> (Vec<Vec<usize>>, Vec<usize>) {
    let n = a.size();
    let mut reps: Vec<State> = Vec::new();
    let mut class = vec![0; n];
    for q in 0..n {
        match reps.iter().position(|&r| weak_states_equivalent(a, r, q)) {
            Some(c) => class[q] = c,
            None => {
                class[q] = reps.len();
                reps.push(q);
            }
        }
    }
    let table = reps
        .iter()
        .map(|&r| a.alphabet().letters().map(|l| class[a.ts().succ(r, l)]).collect())
        .collect();
    (table, class)
}

/// Whether `p` and `q` accept the same words among `sample`, ignoring those
/// `skip` returns true for.
pub fn agree_on(
    a: &OmegaAutomaton,
    p: State,
    b: &OmegaAutomaton,
    q: State,
    sample: &[UpWord],
    skip: impl Fn(&UpWord) -> bool,
) -> Option<UpWord> {
    sample
        .iter()
        .find(|w| !skip(w) && a.accepts_from(w, Some(p)) != b.accepts_from(w, Some(q)))
        .cloned()
}

/// Reaches state `run(from, w)`; exposed for the learner checks.
pub fn state_after(a: &OmegaAutomaton, w: &[Letter]) -> State {
    run(a, a.ts().initial(), w)
}
