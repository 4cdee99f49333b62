//! Language-level operations: membership, separating lassos modulo a
//! don't-care set, D-equivalence, trivial right-congruence and the
//! D-congruence of an automaton.

use std::collections::BTreeMap;

use crate::automaton::{OmegaAutomaton, Priority};
use crate::error::{Error, Result};
use crate::product::product_from;
use crate::quotient::quotient;
use crate::scc::msccs;
use crate::stateset::StateSet;
use crate::ts::{Homomorphism, State, TransitionSystem};
use crate::word::UpWord;

/// A request for a word outside the don't-care set on which two
/// (automaton, start state) pairs disagree.
#[derive(Debug, Clone, Copy)]
pub struct SeparationQuery<'a> {
    pub left: &'a OmegaAutomaton,
    pub left_start: State,
    pub right: &'a OmegaAutomaton,
    pub right_start: State,
    /// Don't-care set as a parity (or Büchi) automaton; `None` is the empty set.
    pub dontcare: Option<&'a OmegaAutomaton>,
}

/// The empty don't-care set: one state, priority 1, self-loops.
pub fn empty_dontcare(alphabet: &crate::alphabet::Alphabet) -> OmegaAutomaton {
    let ts = TransitionSystem::new(
        alphabet.clone(),
        vec!["∅".into()],
        0,
        vec![vec![0; alphabet.len()]],
    )
    .expect("one-state system");
    OmegaAutomaton::parity(ts, vec![1]).expect("one priority")
}

/// Whether `w` lies in the don't-care set (`None` = empty set).
pub fn is_dontcare(dontcare: Option<&OmegaAutomaton>, w: &UpWord) -> bool {
    dontcare.is_some_and(|d| d.accepts(w))
}

/// Searches the product `left × right × D` for a strongly connected set whose
/// maximal priorities differ in parity on the first two components and are
/// odd on the third; returns the shortest lasso found, canonicalized.
///
/// Every returned word is re-checked against all three automata; a mismatch
/// is reported as an internal error.
pub fn separating_lasso(query: &SeparationQuery<'_>) -> Result<Option<UpWord>> {
    let SeparationQuery {
        left,
        left_start,
        right,
        right_start,
        dontcare,
    } = *query;
    let empty;
    let d = match dontcare {
        Some(d) => d,
        None => {
            empty = empty_dontcare(left.alphabet());
            &empty
        }
    };
    if d.alphabet() != left.alphabet() {
        return Err(Error::InvalidArgument("don't-care automaton uses a different alphabet".into()));
    }
    let pair = product_from(left.ts(), left_start, right.ts(), right_start)?;
    let triple = product_from(&pair.ts, pair.ts.initial(), d.ts(), d.ts().initial())?;
    let (lp, rp, dp) = (left.priorities(), right.priorities(), d.priorities());
    let n = triple.ts.size();
    let prio: Vec<[Priority; 3]> = (0..n)
        .map(|t| {
            let pq = triple.left[t];
            [lp[pair.left[pq]], rp[pair.right[pq]], dp[triple.right[t]]]
        })
        .collect();
    let range = |c: usize| {
        let mut v: Vec<Priority> = prio.iter().map(|p| p[c]).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let (r0, r1, r2) = (range(0), range(1), range(2));

    let mut best: Option<UpWord> = None;
    for &i in &r0 {
        for &j in r1.iter().filter(|&&j| j % 2 != i % 2) {
            for &k in r2.iter().filter(|&&k| k % 2 == 1) {
                let bound = [i, j, k];
                let allowed = StateSet::from_states(
                    n,
                    (0..n).filter(|&t| (0..3).all(|c| prio[t][c] <= bound[c])),
                );
                let m = msccs(&triple.ts, Some(&allowed));
                for ci in m.nontrivial() {
                    let comp = &m.components[ci];
                    let maxima = [0, 1, 2].map(|c| comp.iter().map(|t| prio[t][c]).max().unwrap());
                    if maxima != bound {
                        continue;
                    }
                    let w = lasso_into(&triple.ts, comp, |t, c| prio[t][c] == bound[c]);
                    if best.as_ref().is_none_or(|b| w < *b) {
                        best = Some(w);
                    }
                }
            }
        }
    }

    if let Some(w) = &best {
        let l = left.accepts_from(w, Some(left_start));
        let r = right.accepts_from(w, Some(right_start));
        if l == r || d.accepts(w) {
            return Err(Error::Internal(format!(
                "separating lasso failed verification (left {l}, right {r}, dontcare {})",
                d.accepts(w)
            )));
        }
    }
    Ok(best)
}

/// A lasso from the initial state of `ts` whose infinity set lies in the
/// strongly connected set `comp` and visits, for each of the three
/// coordinates, a state where `is_max(state, coordinate)` holds.
fn lasso_into(
    ts: &TransitionSystem,
    comp: &StateSet,
    is_max: impl Fn(State, usize) -> bool,
) -> UpWord {
    let spoke = ts
        .shortest_path(ts.initial(), comp, None)
        .expect("component reachable in a trim product");
    let entry = ts.run_unchecked(ts.initial(), &spoke);
    let mut targets: Vec<State> = Vec::new();
    for c in 0..3 {
        let t = comp.iter().find(|&t| is_max(t, c)).expect("maximum attained");
        if !targets.contains(&t) {
            targets.push(t);
        }
    }
    let mut cycle = Vec::new();
    let mut cur = entry;
    for t in targets {
        if t != cur {
            let single = StateSet::from_states(ts.size(), [t]);
            cycle.extend(ts.shortest_path(cur, &single, Some(comp)).expect("strongly connected"));
            cur = t;
        }
    }
    let home = StateSet::from_states(ts.size(), [entry]);
    if cur != entry || cycle.is_empty() {
        cycle.extend(
            ts.shortest_nonempty_path(cur, &home, Some(comp))
                .expect("strongly connected"),
        );
    }
    UpWord::new(&spoke, &cycle).expect("non-empty cycle")
}

/// `None` iff `L(a) \ D = L(b) \ D`; otherwise a canonical counterexample
/// outside `D`.
pub fn d_equivalent(
    a: &OmegaAutomaton,
    b: &OmegaAutomaton,
    dontcare: Option<&OmegaAutomaton>,
) -> Result<Option<UpWord>> {
    separating_lasso(&SeparationQuery {
        left: a,
        left_start: a.ts().initial(),
        right: b,
        right_start: b.ts().initial(),
        dontcare,
    })
}

/// True iff all states of `a` accept the same language, i.e. `L(a)` has a
/// one-class right-congruence.
pub fn has_trivial_rc(a: &OmegaAutomaton) -> Result<bool> {
    let q0 = a.ts().initial();
    for q in a.ts().states().filter(|&q| q != q0) {
        let sep = separating_lasso(&SeparationQuery {
            left: a,
            left_start: q0,
            right: a,
            right_start: q,
            dontcare: None,
        })?;
        if sep.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The D-congruence classes of an automaton's states, with a separating
/// witness for every pair of distinct classes.
#[derive(Debug, Clone)]
pub struct CongruencePartition {
    owner: OmegaAutomaton,
    classes: Vec<usize>,
    witnesses: BTreeMap<(usize, usize), UpWord>,
}

impl CongruencePartition {
    pub fn owner(&self) -> &OmegaAutomaton {
        &self.owner
    }

    /// Class id of every state; ids are dense and numbered by first state.
    pub fn classes(&self) -> &[usize] {
        &self.classes
    }

    pub fn class_of(&self, q: State) -> usize {
        self.classes[q]
    }

    pub fn class_count(&self) -> usize {
        self.classes.iter().copied().max().map_or(0, |m| m + 1)
    }

    /// The witness separating classes `c1` and `c2` (order irrelevant).
    pub fn witness(&self, c1: usize, c2: usize) -> Option<&UpWord> {
        self.witnesses.get(&(c1.min(c2), c1.max(c2)))
    }

    pub fn witnesses(&self) -> impl Iterator<Item = (&(usize, usize), &UpWord)> {
        self.witnesses.iter()
    }

    /// Representative (least state) of a class.
    pub fn representative(&self, class: usize) -> State {
        self.classes.iter().position(|&c| c == class).expect("class exists")
    }
}

fn require_trivial_rc(dontcare: Option<&OmegaAutomaton>) -> Result<()> {
    if let Some(d) = dontcare {
        if !has_trivial_rc(d)? {
            return Err(Error::Precondition(
                "don't-care set must have a trivial right-congruence".into(),
            ));
        }
    }
    Ok(())
}

/// Partitions the states of `a` by `∼_{L(a),D}`.
///
/// Requires `D` to have a trivial right-congruence; otherwise the relation
/// need not be a right-congruence and the input is refused.
pub fn d_congruence(
    a: &OmegaAutomaton,
    dontcare: Option<&OmegaAutomaton>,
) -> Result<CongruencePartition> {
    require_trivial_rc(dontcare)?;
    let mut reps: Vec<State> = Vec::new();
    let mut classes = vec![0; a.size()];
    let mut witnesses = BTreeMap::new();
    for q in a.ts().states() {
        let mut found = None;
        let mut pending = Vec::new();
        for (c, &r) in reps.iter().enumerate() {
            let sep = separating_lasso(&SeparationQuery {
                left: a,
                left_start: r,
                right: a,
                right_start: q,
                dontcare,
            })?;
            match sep {
                None => {
                    found = Some(c);
                    break;
                }
                Some(w) => pending.push((c, w)),
            }
        }
        match found {
            Some(c) => classes[q] = c,
            None => {
                let id = reps.len();
                reps.push(q);
                classes[q] = id;
                for (c, w) in pending {
                    witnesses.insert((c, id), w);
                }
            }
        }
    }
    Ok(CongruencePartition {
        owner: a.clone(),
        classes,
        witnesses,
    })
}

/// The transition system `T_{L,D}` of the D-congruence, with the quotient
/// homomorphism from `a`'s transition system.
pub fn congruence_quotient(
    a: &OmegaAutomaton,
    dontcare: Option<&OmegaAutomaton>,
) -> Result<(TransitionSystem, Homomorphism)> {
    let part = d_congruence(a, dontcare)?;
    quotient(a.ts(), part.classes()).map_err(|e| match e {
        Error::Precondition(msg) => Error::Internal(format!("D-congruence is not a congruence: {msg}")),
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn w(a: &OmegaAutomaton, spoke: &str, cycle: &str) -> UpWord {
        let s = a.alphabet();
        UpWord::new(&s.parse_word(spoke).unwrap(), &s.parse_word(cycle).unwrap()).unwrap()
    }

    #[test]
    fn membership_examples() {
        let h3 = fixtures::learning_h3();
        assert!(h3.accepts(&w(&h3, "b", "a")));
        let f1 = fixtures::four_priority_dpa();
        assert!(!f1.accepts(&w(&f1, "", "a")));
    }

    #[test]
    fn separation_on_dba_a() {
        let a = fixtures::dba_a();
        let d = fixtures::dontcare_suffix_b(a.alphabet());
        let q = SeparationQuery {
            left: &a,
            left_start: 0,
            right: &a,
            right_start: 1,
            dontcare: None,
        };
        let word = separating_lasso(&q).unwrap().expect("q0 and q1 differ");
        assert_ne!(a.accepts_from(&word, Some(0)), a.accepts_from(&word, Some(1)));
        // every word separating q0 from q1 ends in bω
        assert!(d.accepts(&word));
        let q = SeparationQuery { dontcare: Some(&d), ..q };
        assert_eq!(separating_lasso(&q).unwrap(), None);
        let same = SeparationQuery { right_start: 0, ..q };
        assert_eq!(separating_lasso(&same).unwrap(), None);
    }

    #[test]
    fn equivalence_examples() {
        let h2 = fixtures::learning_h2();
        let h3 = fixtures::learning_h3();
        let d = fixtures::learning_dontcare();
        assert_eq!(d_equivalent(&h3, &h3, Some(&d)).unwrap(), None);
        let ce = d_equivalent(&h2, &h3, Some(&d)).unwrap().expect("H2 is wrong");
        assert_ne!(h2.accepts(&ce), h3.accepts(&ce));
        assert!(!d.accepts(&ce));
        assert_eq!(d_equivalent(&h3, &fixtures::learning_target(), Some(&d)).unwrap(), None);
        // the forced counterexample of the worked learning run is a genuine one
        let abw = w(&h2, "", "ab");
        assert!(!h2.accepts(&abw) && h3.accepts(&abw));
    }

    #[test]
    fn trivial_rc_examples() {
        let d = fixtures::dontcare_suffix_b(&fixtures::abc());
        assert!(has_trivial_rc(&d).unwrap());
        assert!(!has_trivial_rc(&fixtures::dba_a()).unwrap());
        assert!(has_trivial_rc(&fixtures::dba_b()).unwrap());
        assert!(has_trivial_rc(&empty_dontcare(&fixtures::abc())).unwrap());
    }

    #[test]
    fn congruence_examples() {
        let d = fixtures::learning_dontcare();
        let u = fixtures::learning_target();
        let part = d_congruence(&u, Some(&d)).unwrap();
        assert_eq!(part.class_count(), 5);
        let (t, h) = congruence_quotient(&u, Some(&d)).unwrap();
        assert!(t.is_isomorphic(fixtures::learning_h3().ts()));
        assert!(u.ts().check_homomorphism(&t, h.as_slice()).is_ok());

        let split = fixtures::learning_h3_split();
        let (t, _) = congruence_quotient(&split, Some(&d)).unwrap();
        assert!(t.is_isomorphic(fixtures::learning_h3().ts()));

        let a = fixtures::dba_a();
        assert_eq!(d_congruence(&a, None).unwrap().class_count(), 3);
        let all = crate::fixtures::dontcare_eventually(a.alphabet(), "a");
        // everything is don't-care: Σω as a one-state even automaton
        let everything = OmegaAutomaton::parity(all.ts().clone(), vec![0, 0]).unwrap();
        assert_eq!(d_congruence(&a, Some(&everything)).unwrap().class_count(), 1);
    }

    #[test]
    fn witnesses_are_verified() {
        let a = fixtures::dba_a();
        let part = d_congruence(&a, None).unwrap();
        for (&(c1, c2), w) in part.witnesses() {
            let (r1, r2) = (part.representative(c1), part.representative(c2));
            assert_ne!(a.accepts_from(w, Some(r1)), a.accepts_from(w, Some(r2)));
        }
    }

    #[test]
    fn refuses_dontcare_without_trivial_rc() {
        let a = fixtures::dba_b();
        let bad = fixtures::dba_a();
        assert!(matches!(d_congruence(&a, Some(&bad)), Err(Error::Precondition(_))));
    }
}
