//! Seedable generators for random automata, don't-care sets and graphs.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::alphabet::Alphabet;
use crate::automaton::{Acceptance, OmegaAutomaton, Priority};
use crate::fixtures::{dontcare_eventually, dontcare_infinitely};
use crate::hardness::Graph;
use crate::scc::msccs;
use crate::stateset::StateSet;
use crate::ts::{State, TransitionSystem};

/// A random complete transition system with at most `n` states (unreachable
/// states are dropped).
pub fn random_ts<R: Rng + ?Sized>(rng: &mut R, n: usize, alphabet: &Alphabet) -> TransitionSystem {
    let n = n.max(1);
    let rows = (0..n)
        .map(|_| (0..alphabet.len()).map(|_| rng.gen_range(0..n)).collect())
        .collect();
    trimmed_with_names(alphabet, n, rows)
}

fn trimmed_with_names(alphabet: &Alphabet, n: usize, rows: Vec<Vec<State>>) -> TransitionSystem {
    let names = (0..n).map(|q| format!("q{q}")).collect();
    let (ts, _) = TransitionSystem::trimmed(alphabet.clone(), names, 0, rows).expect("well-formed table");
    let names = (0..ts.size()).map(|q| format!("q{q}")).collect();
    ts.with_names(names).expect("one name per state")
}

/// A random weak Büchi automaton: each non-transient MSCC is accepting with
/// probability 1/2, transient states are rejecting. Edges prefer states with
/// a higher index, so the result usually has several MSCCs.
pub fn random_wdba<R: Rng + ?Sized>(rng: &mut R, n: usize, alphabet: &Alphabet) -> OmegaAutomaton {
    let n = n.max(1);
    let rows = (0..n)
        .map(|q| {
            (0..alphabet.len())
                .map(|_| if rng.gen_bool(0.7) { rng.gen_range(q..n) } else { rng.gen_range(0..n) })
                .collect()
        })
        .collect();
    let ts = trimmed_with_names(alphabet, n, rows);
    let m = msccs(&ts, None);
    let mut acc = StateSet::empty(ts.size());
    for ci in m.nontrivial() {
        if rng.gen_bool(0.5) {
            acc.union_with(&m.components[ci]);
        }
    }
    OmegaAutomaton::weak_buchi(ts, acc).expect("uniform components")
}

/// A random DPA with priorities in `0..=max_priority`.
pub fn random_dpa<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    alphabet: &Alphabet,
    max_priority: Priority,
) -> OmegaAutomaton {
    let ts = random_ts(rng, n, alphabet);
    let prios = (0..ts.size()).map(|_| rng.gen_range(0..=max_priority)).collect();
    OmegaAutomaton::parity(ts, prios).expect("one priority per state")
}

/// The don't-care sets used for random experiments, all with trivial
/// right-congruence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DontCareShape {
    Empty,
    /// Words ending in `bω` for the second letter `b`.
    EventuallyB,
    /// Words with infinitely many `b`.
    InfinitelyB,
}

impl DontCareShape {
    pub const ALL: [DontCareShape; 3] = [Self::Empty, Self::EventuallyB, Self::InfinitelyB];

    /// The automaton for this set over `alphabet` (`None` for the empty set).
    pub fn build(self, alphabet: &Alphabet) -> Option<OmegaAutomaton> {
        let b = alphabet.symbol(1.min(alphabet.len() - 1));
        match self {
            Self::Empty => None,
            Self::EventuallyB => Some(dontcare_eventually(alphabet, b)),
            Self::InfinitelyB => Some(dontcare_infinitely(alphabet, b)),
        }
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        *Self::ALL.choose(rng).expect("non-empty")
    }
}

/// Adds a copy of a random state and redirects some of its incoming edges to
/// the copy. The language is unchanged; returns `None` if no split was
/// possible (every candidate lost reachability).
pub fn split_state<R: Rng + ?Sized>(rng: &mut R, a: &OmegaAutomaton) -> Option<OmegaAutomaton> {
    let ts = a.ts();
    let n = ts.size();
    let k = ts.alphabet().len();
    let mut states: Vec<State> = ts.states().collect();
    states.shuffle(rng);
    for q in states {
        let incoming: Vec<(State, usize)> = ts
            .states()
            .flat_map(|p| (0..k).map(move |l| (p, l)))
            .filter(|&(p, l)| ts.succ(p, l) == q)
            .collect();
        if incoming.len() < 2 && q != ts.initial() {
            continue;
        }
        let mut table = ts.table();
        table.push(table[q].clone());
        let mut moved = 0;
        for &(p, l) in &incoming {
            if rng.gen_bool(0.5) {
                table[p][l] = n;
                moved += 1;
            }
        }
        if moved == 0 {
            if let Some(&(p, l)) = incoming.first() {
                table[p][l] = n;
            }
        }
        let mut names = ts.names().to_vec();
        names.push(format!("{}'", ts.name(q)));
        let Ok(new_ts) = TransitionSystem::new(ts.alphabet().clone(), names, ts.initial(), table) else {
            continue;
        };
        let out = match a.acceptance() {
            Acceptance::Parity(p) => {
                let mut p = p.clone();
                p.push(p[q]);
                OmegaAutomaton::parity(new_ts, p)
            }
            Acceptance::Buchi { accepting, weak } => {
                let mut acc = StateSet::from_states(n + 1, accepting.iter());
                if accepting.contains(q) {
                    acc.insert(n);
                }
                if *weak {
                    OmegaAutomaton::weak_buchi(new_ts, acc)
                } else {
                    OmegaAutomaton::buchi(new_ts, acc)
                }
            }
        };
        if let Ok(out) = out {
            return Some(out);
        }
    }
    None
}

/// A random graph on `v1..vn` with at least one edge (needs `n ≥ 2`).
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> Graph {
    let n = n.max(2);
    let names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let mut edges: Vec<(String, String)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                edges.push((names[i].clone(), names[j].clone()));
            }
        }
    }
    if edges.is_empty() {
        edges.push((names[0].clone(), names[1].clone()));
    }
    Graph::new(names, edges).expect("valid graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::langops::{d_equivalent, has_trivial_rc};
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn generated_automata_are_well_formed() {
        let mut rng = StdRng::seed_from_u64(7);
        let ab = fixtures::ab();
        for _ in 0..20 {
            let w = random_wdba(&mut rng, 5, &ab);
            assert!(w.is_weak() && w.size() <= 5);
            let d = random_dpa(&mut rng, 4, &ab, 3);
            assert!(d.priorities().iter().all(|&p| p <= 3));
        }
    }

    #[test]
    fn dontcare_shapes_have_trivial_rc() {
        let ab = fixtures::ab();
        for s in DontCareShape::ALL {
            if let Some(d) = s.build(&ab) {
                assert!(has_trivial_rc(&d).unwrap());
            }
        }
    }

    #[test]
    fn splitting_preserves_language() {
        let mut rng = StdRng::seed_from_u64(3);
        let h3 = fixtures::learning_h3();
        for _ in 0..10 {
            let big = split_state(&mut rng, &h3).unwrap();
            assert_eq!(big.size(), 6);
            assert!(big.is_weak());
            assert!(d_equivalent(&big, &h3, None).unwrap().is_none());
        }
    }
}
