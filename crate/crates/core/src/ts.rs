use std::collections::VecDeque;

use crate::alphabet::{Alphabet, Letter};
use crate::error::{Error, Result};
use crate::stateset::StateSet;

/// Index of a state within its transition system.
pub type State = usize;

/// A complete deterministic transition system `(Σ, Q, δ, q₀)` whose states
/// are all reachable from the initial state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionSystem {
    alphabet: Alphabet,
    names: Vec<String>,
    initial: State,
    // row-major: delta[q * |Σ| + a]
    delta: Vec<State>,
}

impl TransitionSystem {
    /// Builds a system from a successor table `delta[q][a]`.
    ///
    /// Fails if the table is not total, refers to unknown states, or leaves
    /// some state unreachable (use [`TransitionSystem::trimmed`] to drop
    /// unreachable states instead).
    pub fn new(
        alphabet: Alphabet,
        names: Vec<String>,
        initial: State,
        delta: Vec<Vec<State>>,
    ) -> Result<Self> {
        let ts = Self::from_table(alphabet, names, initial, delta)?;
        let reach = ts.reachable_from(ts.initial);
        if reach.len() != ts.size() {
            let missing: Vec<&str> = (0..ts.size())
                .filter(|&q| !reach.contains(q))
                .map(|q| ts.name(q))
                .collect();
            return Err(Error::InvalidArgument(format!(
                "unreachable states: {}",
                missing.join(", ")
            )));
        }
        Ok(ts)
    }

    /// Like [`TransitionSystem::new`] but silently removes unreachable
    /// states. Returns the trimmed system and, for each original state, its
    /// index in the trimmed system (if kept).
    pub fn trimmed(
        alphabet: Alphabet,
        names: Vec<String>,
        initial: State,
        delta: Vec<Vec<State>>,
    ) -> Result<(Self, Vec<Option<State>>)> {
        let raw = Self::from_table(alphabet, names, initial, delta)?;
        Ok(raw.trim())
    }

    fn from_table(
        alphabet: Alphabet,
        names: Vec<String>,
        initial: State,
        delta: Vec<Vec<State>>,
    ) -> Result<Self> {
        let n = delta.len();
        if n == 0 {
            return Err(Error::InvalidArgument("transition system needs at least one state".into()));
        }
        if names.len() != n {
            return Err(Error::InvalidArgument(format!(
                "{} state names given for {n} states",
                names.len()
            )));
        }
        if initial >= n {
            return Err(Error::InvalidArgument(format!("initial state {initial} out of range")));
        }
        let k = alphabet.len();
        let mut flat = Vec::with_capacity(n * k);
        for (q, row) in delta.iter().enumerate() {
            if row.len() != k {
                return Err(Error::InvalidArgument(format!(
                    "state {} has {} successors, expected {k}",
                    names[q],
                    row.len()
                )));
            }
            for &p in row {
                if p >= n {
                    return Err(Error::InvalidArgument(format!("successor {p} out of range")));
                }
                flat.push(p);
            }
        }
        Ok(TransitionSystem {
            alphabet,
            names,
            initial,
            delta: flat,
        })
    }

    /// Restricts the system to the states reachable from the initial state,
    /// renumbered in their original order.
    fn trim(&self) -> (Self, Vec<Option<State>>) {
        let reach = self.reachable_from(self.initial);
        let mut index = vec![None; self.size()];
        for (i, q) in reach.iter().enumerate() {
            index[q] = Some(i);
        }
        let k = self.alphabet.len();
        let mut delta = Vec::with_capacity(reach.len() * k);
        let mut names = Vec::with_capacity(reach.len());
        for q in reach.iter() {
            names.push(self.names[q].clone());
            for a in self.alphabet.letters() {
                delta.push(index[self.succ(q, a)].unwrap());
            }
        }
        let ts = TransitionSystem {
            alphabet: self.alphabet.clone(),
            names,
            initial: index[self.initial].unwrap(),
            delta,
        };
        (ts, index)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn states(&self) -> std::ops::Range<State> {
        0..self.size()
    }

    pub fn initial(&self) -> State {
        self.initial
    }

    pub fn name(&self, q: State) -> &str {
        &self.names[q]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn state_by_name(&self, name: &str) -> Option<State> {
        self.names.iter().position(|n| n == name)
    }

    /// Same system with new display names.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.size() {
            return Err(Error::InvalidArgument("wrong number of state names".into()));
        }
        self.names = names;
        Ok(self)
    }

    #[inline]
    pub fn succ(&self, q: State, a: Letter) -> State {
        self.delta[q * self.alphabet.len() + a]
    }

    pub fn successors(&self, q: State) -> &[State] {
        let k = self.alphabet.len();
        &self.delta[q * k..(q + 1) * k]
    }

    /// Successor table `delta[q][a]`.
    pub fn table(&self) -> Vec<Vec<State>> {
        self.states().map(|q| self.successors(q).to_vec()).collect()
    }

    /// `δ*(from, word)`; fails on letters outside the alphabet.
    pub fn run_state(&self, from: State, word: &[Letter]) -> Result<State> {
        if !self.alphabet.contains_word(word) {
            return Err(Error::InvalidArgument("word contains an unknown letter".into()));
        }
        Ok(self.run_unchecked(from, word))
    }

    pub(crate) fn run_unchecked(&self, from: State, word: &[Letter]) -> State {
        word.iter().fold(from, |q, &a| self.succ(q, a))
    }

    pub fn reachable_from(&self, from: State) -> StateSet {
        let mut seen = StateSet::empty(self.size());
        let mut queue = VecDeque::from([from]);
        seen.insert(from);
        while let Some(q) = queue.pop_front() {
            for &p in self.successors(q) {
                if !seen.contains(p) {
                    seen.insert(p);
                    queue.push_back(p);
                }
            }
        }
        seen
    }

    /// Shortest word (in shortlex order among shortest) leading from `from`
    /// to some state of `targets` while staying inside `within`.
    /// Returns the empty word if `from` is already a target.
    pub fn shortest_path(
        &self,
        from: State,
        targets: &StateSet,
        within: Option<&StateSet>,
    ) -> Option<Vec<Letter>> {
        if targets.contains(from) {
            return Some(Vec::new());
        }
        self.bfs(from, |p| targets.contains(p), within)
    }

    /// Shortest non-empty word leading from `from` back into `targets`
    /// inside `within`.
    pub fn shortest_nonempty_path(
        &self,
        from: State,
        targets: &StateSet,
        within: Option<&StateSet>,
    ) -> Option<Vec<Letter>> {
        self.bfs(from, |p| targets.contains(p), within)
    }

    fn bfs(
        &self,
        from: State,
        is_target: impl Fn(State) -> bool,
        within: Option<&StateSet>,
    ) -> Option<Vec<Letter>> {
        let n = self.size();
        let mut parent: Vec<Option<(State, Letter)>> = vec![None; n];
        let mut seen = StateSet::empty(n);
        // `from` is not marked as seen so that cycles back to it are found.
        let mut queue = VecDeque::from([from]);
        while let Some(q) = queue.pop_front() {
            for a in self.alphabet.letters() {
                let p = self.succ(q, a);
                if within.is_some_and(|w| !w.contains(p)) || seen.contains(p) {
                    continue;
                }
                seen.insert(p);
                parent[p] = Some((q, a));
                if is_target(p) {
                    let mut word = Vec::new();
                    let mut cur = p;
                    loop {
                        let (prev, b) = parent[cur].expect("bfs parent");
                        word.push(b);
                        if prev == from {
                            break;
                        }
                        cur = prev;
                    }
                    word.reverse();
                    return Some(word);
                }
                queue.push_back(p);
            }
        }
        None
    }

    /// Checks that `map` is a homomorphism from `self` onto `target`.
    pub fn check_homomorphism(&self, target: &TransitionSystem, map: &[State]) -> Result<()> {
        if self.alphabet != target.alphabet {
            return Err(Error::Precondition("homomorphism between different alphabets".into()));
        }
        if map.len() != self.size() || map.iter().any(|&p| p >= target.size()) {
            return Err(Error::Precondition("homomorphism has wrong domain or range".into()));
        }
        if map[self.initial] != target.initial {
            return Err(Error::Precondition("homomorphism does not map initial to initial".into()));
        }
        for q in self.states() {
            for a in self.alphabet.letters() {
                if map[self.succ(q, a)] != target.succ(map[q], a) {
                    return Err(Error::Precondition(format!(
                        "homomorphism broken at state {} letter {}",
                        self.name(q),
                        self.alphabet.symbol(a)
                    )));
                }
            }
        }
        let image = StateSet::from_states(target.size(), map.iter().copied());
        if image.len() != target.size() {
            return Err(Error::Precondition("homomorphism is not surjective".into()));
        }
        Ok(())
    }

    /// Returns the isomorphism `self → other` if the two (reachable,
    /// deterministic) systems have the same transition graph.
    pub fn isomorphism(&self, other: &TransitionSystem) -> Option<Vec<State>> {
        if self.alphabet != other.alphabet || self.size() != other.size() {
            return None;
        }
        let mut map: Vec<Option<State>> = vec![None; self.size()];
        let mut used = StateSet::empty(other.size());
        map[self.initial] = Some(other.initial);
        used.insert(other.initial);
        let mut queue = VecDeque::from([self.initial]);
        while let Some(q) = queue.pop_front() {
            let image = map[q].unwrap();
            for a in self.alphabet.letters() {
                let p = self.succ(q, a);
                let p2 = other.succ(image, a);
                match map[p] {
                    Some(existing) if existing != p2 => return None,
                    Some(_) => {}
                    None => {
                        if used.contains(p2) {
                            return None;
                        }
                        map[p] = Some(p2);
                        used.insert(p2);
                        queue.push_back(p);
                    }
                }
            }
        }
        map.into_iter().collect()
    }

    pub fn is_isomorphic(&self, other: &TransitionSystem) -> bool {
        self.isomorphism(other).is_some()
    }
}

/// A homomorphism between transition systems, as a state map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homomorphism {
    map: Vec<State>,
}

impl Homomorphism {
    pub fn new(source: &TransitionSystem, target: &TransitionSystem, map: Vec<State>) -> Result<Self> {
        source.check_homomorphism(target, &map)?;
        Ok(Homomorphism { map })
    }

    pub fn identity(ts: &TransitionSystem) -> Self {
        Homomorphism {
            map: ts.states().collect(),
        }
    }

    #[cfg(test)]
    pub(crate) fn from_map_unchecked(map: Vec<State>) -> Self {
        Homomorphism { map }
    }

    #[inline]
    pub fn apply(&self, q: State) -> State {
        self.map[q]
    }

    pub fn as_slice(&self) -> &[State] {
        &self.map
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_cycle() -> TransitionSystem {
        let ab = Alphabet::from_chars("ab").unwrap();
        TransitionSystem::new(ab, vec!["p".into(), "q".into()], 0, vec![vec![0, 1], vec![1, 0]])
            .unwrap()
    }

    #[test]
    fn rejects_incomplete_and_unreachable() {
        let ab = Alphabet::from_chars("ab").unwrap();
        assert!(TransitionSystem::new(ab.clone(), vec!["p".into()], 0, vec![vec![0]]).is_err());
        let err = TransitionSystem::new(
            ab.clone(),
            vec!["p".into(), "q".into()],
            0,
            vec![vec![0, 0], vec![1, 1]],
        )
        .unwrap_err();
        assert!(err.to_string().contains("q"));
        let (ts, index) = TransitionSystem::trimmed(
            ab,
            vec!["p".into(), "q".into()],
            0,
            vec![vec![0, 0], vec![1, 1]],
        )
        .unwrap();
        assert_eq!(ts.size(), 1);
        assert_eq!(index, vec![Some(0), None]);
    }

    #[test]
    fn runs_and_paths() {
        let ts = two_cycle();
        assert_eq!(ts.run_state(0, &[]).unwrap(), 0);
        assert_eq!(ts.run_state(0, &[1, 0, 1]).unwrap(), 0);
        assert!(ts.run_state(0, &[2]).is_err());
        let target = StateSet::from_states(2, [1]);
        assert_eq!(ts.shortest_path(0, &target, None), Some(vec![1]));
        let back = StateSet::from_states(2, [0]);
        assert_eq!(ts.shortest_nonempty_path(0, &back, None), Some(vec![0]));
        assert_eq!(ts.shortest_nonempty_path(1, &StateSet::from_states(2, [1]), None), Some(vec![0]));
        assert_eq!(ts.shortest_path(0, &target, Some(&back)), None);
    }

    #[test]
    fn longer_cycle_path() {
        let abc = Alphabet::from_chars("a").unwrap();
        let ts = TransitionSystem::new(
            abc,
            vec!["0".into(), "1".into(), "2".into()],
            0,
            vec![vec![1], vec![2], vec![0]],
        )
        .unwrap();
        let zero = StateSet::from_states(3, [0]);
        assert_eq!(ts.shortest_nonempty_path(0, &zero, None), Some(vec![0, 0, 0]));
        assert_eq!(ts.shortest_path(1, &zero, None), Some(vec![0, 0]));
    }

    #[test]
    fn isomorphism_and_homomorphism() {
        let ts = two_cycle();
        let swapped = TransitionSystem::new(
            ts.alphabet().clone(),
            vec!["x".into(), "y".into()],
            1,
            vec![vec![0, 1], vec![1, 0]],
        )
        .unwrap();
        assert_eq!(ts.isomorphism(&swapped), Some(vec![1, 0]));
        let one = TransitionSystem::new(ts.alphabet().clone(), vec!["*".into()], 0, vec![vec![0, 0]])
            .unwrap();
        assert!(Homomorphism::new(&ts, &one, vec![0, 0]).is_ok());
        assert!(!ts.is_isomorphic(&one));
    }
}
