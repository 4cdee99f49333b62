use crate::alphabet::Alphabet;
use crate::automaton::OmegaAutomaton;
use crate::error::{Error, Result};
use crate::ts::TransitionSystem;
use crate::word::UpWord;

use super::experiment::distinguishing_experiment;
use super::mark::{mark, Conflict, Marking};
use super::table::ObservationTable;
use super::teacher::{Answer, Teacher};

/// Limits for a learning run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LearnerOptions {
    /// Largest number of main-loop rounds before giving up.
    pub max_rounds: usize,
    /// The experiment search stops at `k = 2·|S| + experiment_slack`.
    pub experiment_slack: usize,
}

impl Default for LearnerOptions {
    fn default() -> Self {
        Self {
            max_rounds: 10_000,
            experiment_slack: 64,
        }
    }
}

/// What ended a round.
#[derive(Debug, Clone)]
pub enum RoundOutcome {
    /// The marking failed; `experiment` and its suffixes were added.
    Conflict { conflict: Conflict, experiment: UpWord },
    /// The hypothesis was refuted by `counterexample`.
    Counterexample {
        hypothesis: OmegaAutomaton,
        counterexample: UpWord,
    },
    /// The teacher accepted the hypothesis.
    Accepted { hypothesis: OmegaAutomaton },
}

/// One pass through the main loop, recorded after the table was closed.
#[derive(Debug, Clone)]
pub struct Round {
    pub table: String,
    pub system: TransitionSystem,
    pub outcome: RoundOutcome,
}

/// A finished learning run.
#[derive(Debug, Clone)]
pub struct LearningRun {
    pub rounds: Vec<Round>,
    pub table: ObservationTable,
}

impl LearningRun {
    /// The accepted hypothesis.
    pub fn hypothesis(&self) -> &OmegaAutomaton {
        match &self.rounds.last().expect("a run has rounds").outcome {
            RoundOutcome::Accepted { hypothesis } => hypothesis,
            _ => unreachable!("runs end with an accepted hypothesis"),
        }
    }

    /// All hypotheses submitted to the teacher, in order.
    pub fn hypotheses(&self) -> impl Iterator<Item = &OmegaAutomaton> {
        self.rounds.iter().filter_map(|r| match &r.outcome {
            RoundOutcome::Counterexample { hypothesis, .. } | RoundOutcome::Accepted { hypothesis } => {
                Some(hypothesis)
            }
            RoundOutcome::Conflict { .. } => None,
        })
    }

    /// The full trace: every closed table followed by what happened.
    pub fn trace(&self, alphabet: &Alphabet) -> String {
        let mut out = String::new();
        for (i, r) in self.rounds.iter().enumerate() {
            out.push_str(&format!("round {}\n", i + 1));
            out.push_str(&r.table);
            let note = match &r.outcome {
                RoundOutcome::Conflict { conflict, experiment } => format!(
                    "conflict s={} t={} x={} y={} z={} w={}; experiment {}",
                    alphabet.format_word(&conflict.s),
                    alphabet.format_word(&conflict.t),
                    alphabet.format_word(&conflict.x),
                    alphabet.format_word(&conflict.y),
                    alphabet.format_word(&conflict.z),
                    alphabet.format_word(&conflict.w),
                    experiment.render(alphabet)
                ),
                RoundOutcome::Counterexample {
                    hypothesis,
                    counterexample,
                } => format!(
                    "hypothesis ({}) refuted by {}",
                    states(hypothesis.size()),
                    counterexample.render(alphabet)
                ),
                RoundOutcome::Accepted { hypothesis } => {
                    format!("hypothesis ({}) accepted", states(hypothesis.size()))
                }
            };
            out.push_str(&note);
            out.push_str("\n\n");
        }
        out
    }
}

fn states(n: usize) -> String {
    if n == 1 {
        "1 state".into()
    } else {
        format!("{n} states")
    }
}

/// Learns a D-minimal weak deterministic Büchi automaton from `teacher`.
pub fn learn(teacher: &mut dyn Teacher, alphabet: &Alphabet, options: LearnerOptions) -> Result<LearningRun> {
    let mut table = ObservationTable::new(alphabet.clone());
    let mut rounds = Vec::new();
    loop {
        if rounds.len() >= options.max_rounds {
            return Err(Error::ResourceLimit(format!(
                "no hypothesis accepted after {} rounds",
                options.max_rounds
            )));
        }
        table.close(teacher)?;
        let system = table.transition_system()?;
        let rendered = table.render();
        let outcome = match mark(&table, &system)? {
            Marking::Conflict(conflict) => {
                let cap = 2 * table.access_words().len() + options.experiment_slack;
                let experiment = distinguishing_experiment(teacher, &conflict, cap)?;
                log::debug!("conflict {conflict:?}, experiment {experiment:?}");
                if table.add_experiment(&experiment, teacher)? == 0 {
                    return Err(Error::Internal(format!(
                        "distinguishing experiment {} is already a column",
                        experiment.render(alphabet)
                    )));
                }
                RoundOutcome::Conflict { conflict, experiment }
            }
            Marking::Consistent { hypothesis, .. } => match teacher.equiv(&hypothesis)? {
                None => {
                    rounds.push(Round {
                        table: rendered,
                        system,
                        outcome: RoundOutcome::Accepted { hypothesis },
                    });
                    return Ok(LearningRun { rounds, table });
                }
                Some(cex) => {
                    check_counterexample(teacher, &hypothesis, &cex, alphabet)?;
                    if table.add_experiment(&cex, teacher)? == 0 {
                        return Err(Error::TeacherInconsistency(format!(
                            "counterexample {} is already a column and classified correctly",
                            cex.render(alphabet)
                        )));
                    }
                    RoundOutcome::Counterexample {
                        hypothesis,
                        counterexample: cex,
                    }
                }
            },
        };
        rounds.push(Round {
            table: rendered,
            system,
            outcome,
        });
    }
}

fn check_counterexample(
    teacher: &mut dyn Teacher,
    hypothesis: &OmegaAutomaton,
    cex: &UpWord,
    alphabet: &Alphabet,
) -> Result<()> {
    let shown = cex.render(alphabet);
    let in_u = match teacher.member(cex.spoke(), cex.cycle())? {
        Answer::DontCare => {
            return Err(Error::TeacherInconsistency(format!(
                "counterexample {shown} is a don't-care word"
            )))
        }
        Answer::Yes => true,
        Answer::No => false,
    };
    if hypothesis.accepts(cex) == in_u {
        return Err(Error::TeacherInconsistency(format!(
            "counterexample {shown} is classified correctly by the hypothesis"
        )));
    }
    Ok(())
}
