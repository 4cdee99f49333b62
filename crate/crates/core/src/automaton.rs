use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::scc::msccs;
use crate::stateset::StateSet;
use crate::ts::{State, TransitionSystem};
use crate::word::{inf_set, UpWord};

/// Priority of a state in a parity condition.
pub type Priority = u32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Acceptance {
    /// Max-even parity condition.
    Parity(Vec<Priority>),
    /// Büchi condition; `weak` marks automata whose MSCCs are uniformly
    /// accepting or rejecting (checked at construction).
    Buchi { accepting: StateSet, weak: bool },
}

/// A deterministic ω-automaton with state-based acceptance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaAutomaton {
    ts: TransitionSystem,
    acceptance: Acceptance,
}

/// The acceptance type requested from minimization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AcceptanceKind {
    Parity,
    Buchi,
    CoBuchi,
}

impl OmegaAutomaton {
    pub fn parity(ts: TransitionSystem, priorities: Vec<Priority>) -> Result<Self> {
        if priorities.len() != ts.size() {
            return Err(Error::InvalidArgument(format!(
                "{} priorities for {} states",
                priorities.len(),
                ts.size()
            )));
        }
        Ok(OmegaAutomaton {
            ts,
            acceptance: Acceptance::Parity(priorities),
        })
    }

    pub fn buchi(ts: TransitionSystem, accepting: StateSet) -> Result<Self> {
        if accepting.capacity() != ts.size() {
            return Err(Error::InvalidArgument("accepting set does not match the state range".into()));
        }
        Ok(OmegaAutomaton {
            ts,
            acceptance: Acceptance::Buchi {
                accepting,
                weak: false,
            },
        })
    }

    /// A weak Büchi automaton; fails if some MSCC mixes accepting and
    /// rejecting states.
    pub fn weak_buchi(ts: TransitionSystem, accepting: StateSet) -> Result<Self> {
        let mut aut = Self::buchi(ts, accepting)?;
        if let Some(bad) = aut.weakness_violation() {
            return Err(Error::Precondition(format!(
                "not weak: MSCC {{{}}} mixes accepting and rejecting states",
                bad.iter().map(|q| aut.ts.name(q)).collect::<Vec<_>>().join(",")
            )));
        }
        if let Acceptance::Buchi { weak, .. } = &mut aut.acceptance {
            *weak = true;
        }
        Ok(aut)
    }

    pub fn ts(&self) -> &TransitionSystem {
        &self.ts
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.ts.alphabet()
    }

    pub fn size(&self) -> usize {
        self.ts.size()
    }

    pub fn acceptance(&self) -> &Acceptance {
        &self.acceptance
    }

    pub fn is_parity(&self) -> bool {
        matches!(self.acceptance, Acceptance::Parity(_))
    }

    /// True for Büchi automata flagged weak.
    pub fn is_weak_flagged(&self) -> bool {
        matches!(self.acceptance, Acceptance::Buchi { weak: true, .. })
    }

    /// Priority of each state: parity as given; Büchi maps accepting ↦ 2 and
    /// the rest ↦ 1.
    pub fn priorities(&self) -> Vec<Priority> {
        match &self.acceptance {
            Acceptance::Parity(p) => p.clone(),
            Acceptance::Buchi { accepting, .. } => self
                .ts
                .states()
                .map(|q| if accepting.contains(q) { 2 } else { 1 })
                .collect(),
        }
    }

    /// The co-Büchi reading of a Büchi acceptance set: accepting ↦ 0, rest ↦ 1.
    pub fn cobuchi_priorities(&self) -> Option<Vec<Priority>> {
        match &self.acceptance {
            Acceptance::Parity(_) => None,
            Acceptance::Buchi { accepting, .. } => Some(
                self.ts
                    .states()
                    .map(|q| if accepting.contains(q) { 0 } else { 1 })
                    .collect(),
            ),
        }
    }

    /// Same transition system, parity view of the acceptance.
    pub fn to_parity(&self) -> OmegaAutomaton {
        OmegaAutomaton {
            ts: self.ts.clone(),
            acceptance: Acceptance::Parity(self.priorities()),
        }
    }

    /// The accepting set for Büchi automata.
    pub fn accepting(&self) -> Option<&StateSet> {
        match &self.acceptance {
            Acceptance::Buchi { accepting, .. } => Some(accepting),
            Acceptance::Parity(_) => None,
        }
    }

    /// Distinct priority values used (Büchi automata report their parity view).
    pub fn distinct_priorities(&self) -> usize {
        let mut p = self.priorities();
        p.sort_unstable();
        p.dedup();
        p.len()
    }

    /// Whether an infinity set is accepting.
    pub fn accepts_inf(&self, inf: &StateSet) -> bool {
        match &self.acceptance {
            Acceptance::Parity(p) => inf.iter().map(|q| p[q]).max().is_some_and(|m| m % 2 == 0),
            Acceptance::Buchi { accepting, .. } => !inf.is_disjoint(accepting),
        }
    }

    /// Whether `w` is accepted from `from` (the initial state if `None`).
    pub fn accepts_from(&self, w: &UpWord, from: Option<State>) -> bool {
        let inf = inf_set(&self.ts, w, from.unwrap_or(self.ts.initial()));
        self.accepts_inf(&inf)
    }

    pub fn accepts(&self, w: &UpWord) -> bool {
        self.accepts_from(w, None)
    }

    /// Some MSCC containing both accepting and rejecting states, if any.
    /// Transient states are ignored. Parity automata are weak when every
    /// non-transient MSCC has a uniform parity of its priorities.
    pub fn weakness_violation(&self) -> Option<StateSet> {
        let m = msccs(&self.ts, None);
        let prios = self.priorities();
        let found = m
            .nontrivial()
            .map(|i| &m.components[i])
            .find(|c| {
                let mut parities = c.iter().map(|q| prios[q] % 2);
                let first = parities.next();
                parities.any(|p| Some(p) != first)
            })
            .cloned();
        found
    }

    pub fn is_weak(&self) -> bool {
        self.weakness_violation().is_none()
    }

    /// Replaces the transition system by an isomorphic one (same state count
    /// and numbering).
    pub fn with_ts(&self, ts: TransitionSystem) -> Result<Self> {
        if ts.size() != self.ts.size() {
            return Err(Error::InvalidArgument("state count mismatch".into()));
        }
        Ok(OmegaAutomaton {
            ts,
            acceptance: self.acceptance.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn four_priority_membership() {
        let a = fixtures::four_priority_dpa();
        let sigma = a.alphabet().clone();
        let w = |s: &str, c: &str| {
            UpWord::new(&sigma.parse_word(s).unwrap(), &sigma.parse_word(c).unwrap()).unwrap()
        };
        // aω stays in q0 (priority 1)
        assert!(!a.accepts(&w("", "a")));
        let q1 = a.ts().state_by_name("q1").unwrap();
        let q2 = a.ts().state_by_name("q2").unwrap();
        assert_eq!(a.ts().run_state(0, &sigma.parse_word("b").unwrap()).unwrap(), q1);
        assert_eq!(a.ts().run_state(0, &sigma.parse_word("baa").unwrap()).unwrap(), q1);
        assert_eq!(
            inf_set(a.ts(), &w("b", "aa"), 0),
            StateSet::from_states(4, [q1, q2])
        );
    }

    #[test]
    fn weakness_is_checked() {
        let a = fixtures::dba_a();
        let acc = a.accepting().unwrap().clone();
        assert!(OmegaAutomaton::weak_buchi(a.ts().clone(), acc).is_err());
        let h3 = fixtures::learning_h3();
        assert!(h3.is_weak_flagged());
        assert!(h3.is_weak());
    }

    #[test]
    fn buchi_views() {
        let h3 = fixtures::learning_h3();
        let p = h3.priorities();
        let c = h3.cobuchi_priorities().unwrap();
        for q in h3.ts().states() {
            assert_eq!(p[q] == 2, c[q] == 0);
        }
    }
}
