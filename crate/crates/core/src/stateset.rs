use std::fmt;

use fixedbitset::FixedBitSet;

use crate::ts::State;

/// A set of states of one transition system, stored as a bitset over the
/// state range `0..capacity`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateSet {
    bits: FixedBitSet,
}

impl StateSet {
    pub fn empty(capacity: usize) -> Self {
        StateSet {
            bits: FixedBitSet::with_capacity(capacity),
        }
    }

    pub fn full(capacity: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(capacity);
        bits.insert_range(..);
        StateSet { bits }
    }

    pub fn from_states<I: IntoIterator<Item = State>>(capacity: usize, states: I) -> Self {
        let mut set = Self::empty(capacity);
        for q in states {
            set.insert(q);
        }
        set
    }

    pub fn capacity(&self) -> usize {
        self.bits.len()
    }

    pub fn insert(&mut self, q: State) {
        assert!(q < self.capacity(), "state {q} outside range 0..{}", self.capacity());
        self.bits.insert(q);
    }

    pub fn remove(&mut self, q: State) {
        self.bits.set(q, false);
    }

    pub fn contains(&self, q: State) -> bool {
        q < self.capacity() && self.bits.contains(q)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = State> + '_ {
        self.bits.ones()
    }

    pub fn first(&self) -> Option<State> {
        self.bits.minimum()
    }

    pub fn is_subset(&self, other: &StateSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &StateSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn union_with(&mut self, other: &StateSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn intersect_with(&mut self, other: &StateSet) {
        self.bits.intersect_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &StateSet) {
        self.bits.difference_with(&other.bits);
    }

    pub fn union(&self, other: &StateSet) -> StateSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &StateSet) -> StateSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn difference(&self, other: &StateSet) -> StateSet {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    /// Image of this set under a state map into a system with `capacity` states.
    pub fn map(&self, capacity: usize, f: impl Fn(State) -> State) -> StateSet {
        StateSet::from_states(capacity, self.iter().map(f))
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
