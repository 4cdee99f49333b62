//! Active learning of weak deterministic Büchi automata from membership and
//! equivalence queries when some words are don't-cares.
//!
//! The don't-care set must have a trivial right-congruence: then every
//! column of the observation table stays outside it under any prefix, and
//! the learner never has to store a don't-care answer.

mod experiment;
mod mark;
mod run;
mod table;
mod teacher;

pub use experiment::distinguishing_experiment;
pub use mark::{mark, Conflict, Marking};
pub use run::{learn, LearnerOptions, LearningRun, Round, RoundOutcome};
pub use table::ObservationTable;
pub use teacher::{Answer, QueryStats, ScriptedTeacher, SimulatedTeacher, Teacher};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::langops::d_equivalent;
    use crate::word::UpWord;

    fn up(spoke: &str, cycle: &str) -> UpWord {
        let ab = fixtures::ab();
        UpWord::new(&ab.parse_word(spoke).unwrap(), &ab.parse_word(cycle).unwrap()).unwrap()
    }

    fn learning_teacher(forced: Vec<UpWord>) -> ScriptedTeacher {
        let inner =
            SimulatedTeacher::new(fixtures::learning_target(), Some(fixtures::learning_dontcare())).unwrap();
        ScriptedTeacher::new(inner, forced)
    }

    #[test]
    fn learning_run() {
        let mut t = learning_teacher(vec![up("", "a"), up("", "ab")]);
        let run = learn(&mut t, &fixtures::ab(), LearnerOptions::default()).unwrap();
        assert!(t.rejected().is_empty());
        assert_eq!(run.rounds.len(), 4);
        match &run.rounds[1].outcome {
            RoundOutcome::Conflict { conflict, experiment } => {
                let ab = fixtures::ab();
                let w = |s: &str| ab.parse_word(s).unwrap();
                assert_eq!(conflict.s, w("b"));
                assert_eq!(conflict.t, w(""));
                assert_eq!((&conflict.x, &conflict.y), (&w("a"), &w("a")));
                assert_eq!((&conflict.z, &conflict.w), (&w("b"), &w("b")));
                assert_eq!(*experiment, up("ab", "a"));
            }
            other => panic!("expected a conflict, got {other:?}"),
        }
        let hs: Vec<_> = run.hypotheses().collect();
        assert_eq!(hs.len(), 3);
        assert_eq!(hs[0].size(), 1);
        let h2 = fixtures::learning_h2();
        assert!(hs[1].ts().is_isomorphic(h2.ts()));
        assert_eq!(hs[1].accepting(), h2.accepting());
        let h3 = fixtures::learning_h3();
        assert!(hs[2].ts().is_isomorphic(h3.ts()));
        assert_eq!(hs[2].accepting(), h3.accepting());
        assert!(d_equivalent(hs[2], &fixtures::learning_target(), Some(&fixtures::learning_dontcare()))
            .unwrap()
            .is_none());
    }

    #[test]
    fn bogus_script_falls_back() {
        // bω is a don't-care word, never a valid counterexample
        let mut t = learning_teacher(vec![up("", "b")]);
        let run = learn(&mut t, &fixtures::ab(), LearnerOptions::default()).unwrap();
        assert_eq!(t.rejected().len(), 1);
        assert_eq!(run.hypothesis().size(), 5);
    }

    #[test]
    fn universal_language_needs_one_query() {
        let one = crate::ts::TransitionSystem::new(fixtures::ab(), vec!["q".into()], 0, vec![vec![0, 0]]).unwrap();
        let all = crate::automaton::OmegaAutomaton::buchi(one, crate::stateset::StateSet::full(1)).unwrap();
        let mut t = SimulatedTeacher::new(all, None).unwrap();
        let run = learn(&mut t, &fixtures::ab(), LearnerOptions::default()).unwrap();
        assert_eq!(run.hypothesis().size(), 1);
        assert_eq!(t.stats().equiv, 1);
        assert_eq!(t.stats().member, 0);
    }

    #[test]
    fn conflict_loop_spans_several_cycles() {
        // some qualifying column's cycle only returns to its row's state
        // after several repetitions
        let ts = crate::ts::TransitionSystem::new(
            fixtures::ab(),
            ["q0", "q1", "q2", "q3"].map(String::from).to_vec(),
            0,
            vec![vec![3, 2], vec![1, 1], vec![1, 2], vec![2, 1]],
        )
        .unwrap();
        let target =
            crate::automaton::OmegaAutomaton::weak_buchi(ts, crate::stateset::StateSet::from_states(4, [1])).unwrap();
        let mut t = SimulatedTeacher::new(target.clone(), None).unwrap();
        let run = learn(&mut t, &fixtures::ab(), LearnerOptions::default()).unwrap();
        assert_eq!(run.hypothesis().size(), 4);
        assert!(crate::langops::d_equivalent(&target, run.hypothesis(), None).unwrap().is_none());
    }
}
