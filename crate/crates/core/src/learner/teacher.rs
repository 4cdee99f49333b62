use std::collections::VecDeque;

use crate::alphabet::Letter;
use crate::automaton::OmegaAutomaton;
use crate::error::{Error, Result};
use crate::langops::{d_equivalent, has_trivial_rc, is_dontcare};
use crate::word::UpWord;

/// Answer to a membership query `u·vω`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Answer {
    Yes,
    No,
    DontCare,
}

/// The learner's view of the unknown language `U` and don't-care set `D`.
pub trait Teacher {
    /// Classifies `u·vω`; `v` must be non-empty.
    fn member(&mut self, u: &[Letter], v: &[Letter]) -> Result<Answer>;

    /// `None` if the hypothesis agrees with `U` outside `D`, otherwise a
    /// word outside `D` on which they differ.
    fn equiv(&mut self, hypothesis: &OmegaAutomaton) -> Result<Option<UpWord>>;
}

/// Query counters.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct QueryStats {
    pub member: usize,
    pub equiv: usize,
}

/// Answers queries from automata for `U` and `D`.
#[derive(Debug, Clone)]
pub struct SimulatedTeacher {
    target: OmegaAutomaton,
    dontcare: Option<OmegaAutomaton>,
    stats: QueryStats,
}

impl SimulatedTeacher {
    /// `dontcare` must have a trivial right-congruence.
    pub fn new(target: OmegaAutomaton, dontcare: Option<OmegaAutomaton>) -> Result<Self> {
        if let Some(d) = &dontcare {
            if d.alphabet() != target.alphabet() {
                return Err(Error::InvalidArgument("target and don't-care alphabets differ".into()));
            }
            if !has_trivial_rc(d)? {
                return Err(Error::Precondition(
                    "the don't-care set does not have a trivial right-congruence".into(),
                ));
            }
        }
        Ok(Self {
            target,
            dontcare,
            stats: QueryStats::default(),
        })
    }

    pub fn target(&self) -> &OmegaAutomaton {
        &self.target
    }

    pub fn dontcare(&self) -> Option<&OmegaAutomaton> {
        self.dontcare.as_ref()
    }

    pub fn stats(&self) -> QueryStats {
        self.stats
    }

    /// Classification of a word without counting it as a query.
    pub fn classify(&self, w: &UpWord) -> Answer {
        if is_dontcare(self.dontcare.as_ref(), w) {
            Answer::DontCare
        } else if self.target.accepts(w) {
            Answer::Yes
        } else {
            Answer::No
        }
    }
}

impl Teacher for SimulatedTeacher {
    fn member(&mut self, u: &[Letter], v: &[Letter]) -> Result<Answer> {
        self.stats.member += 1;
        Ok(self.classify(&UpWord::new(u, v)?))
    }

    fn equiv(&mut self, hypothesis: &OmegaAutomaton) -> Result<Option<UpWord>> {
        self.stats.equiv += 1;
        d_equivalent(hypothesis, &self.target, self.dontcare.as_ref())
    }
}

/// A simulated teacher that answers equivalence queries with queued
/// counterexamples first. A queued word that is not a genuine counterexample
/// for the submitted hypothesis is dropped and the simulated answer used.
#[derive(Debug, Clone)]
pub struct ScriptedTeacher {
    inner: SimulatedTeacher,
    forced: VecDeque<UpWord>,
    rejected: Vec<UpWord>,
}

impl ScriptedTeacher {
    pub fn new(inner: SimulatedTeacher, forced: impl IntoIterator<Item = UpWord>) -> Self {
        Self {
            inner,
            forced: forced.into_iter().collect(),
            rejected: Vec::new(),
        }
    }

    pub fn inner(&self) -> &SimulatedTeacher {
        &self.inner
    }

    /// Queued words that were dropped because they did not separate the
    /// hypothesis from the target.
    pub fn rejected(&self) -> &[UpWord] {
        &self.rejected
    }

    pub fn remaining(&self) -> usize {
        self.forced.len()
    }
}

impl Teacher for ScriptedTeacher {
    fn member(&mut self, u: &[Letter], v: &[Letter]) -> Result<Answer> {
        self.inner.member(u, v)
    }

    fn equiv(&mut self, hypothesis: &OmegaAutomaton) -> Result<Option<UpWord>> {
        if let Some(w) = self.forced.pop_front() {
            let genuine = match self.inner.classify(&w) {
                Answer::DontCare => false,
                Answer::Yes => !hypothesis.accepts(&w),
                Answer::No => hypothesis.accepts(&w),
            };
            if genuine {
                self.inner.stats.equiv += 1;
                return Ok(Some(w));
            }
            log::warn!("scripted counterexample {w:?} is not genuine, asking the simulated teacher");
            self.rejected.push(w);
        }
        self.inner.equiv(hypothesis)
    }
}
