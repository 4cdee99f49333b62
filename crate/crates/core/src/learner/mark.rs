use crate::alphabet::Word;
use crate::automaton::OmegaAutomaton;
use crate::error::{Error, Result};
use crate::scc::msccs;
use crate::stateset::StateSet;
use crate::ts::{State, TransitionSystem};
use crate::word::inf_set;

use super::table::ObservationTable;

/// Two states of one MSCC of `T_{S,f}` that the table marks differently:
/// `s·xω` is accepted and loops through `s`, `t·yω` is rejected and loops
/// through `t`, `z` leads from `s` to `t` and `w` back.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Conflict {
    pub s: Word,
    pub t: Word,
    pub x: Word,
    pub y: Word,
    pub z: Word,
    pub w: Word,
}

/// Outcome of marking the infinity sets of the table's words.
#[derive(Debug, Clone)]
pub enum Marking {
    /// The weak hypothesis, with the states marked yes and no.
    Consistent {
        hypothesis: OmegaAutomaton,
        yes: StateSet,
        no: StateSet,
    },
    Conflict(Conflict),
}

/// Marks, for every access word `s` and column `α`, the infinity set of
/// `s·α` with the table entry.
///
/// Without a conflict, the hypothesis accepts exactly the states in MSCCs
/// without a "no" mark; transient states are rejecting.
pub fn mark(table: &ObservationTable, ts: &TransitionSystem) -> Result<Marking> {
    let n = ts.size();
    let mut yes = StateSet::empty(n);
    let mut no = StateSet::empty(n);
    for (q, s) in table.access_words().iter().enumerate() {
        let row = table.row(s).expect("access rows are filled");
        for (e, &value) in table.experiments().iter().zip(row) {
            let inf = inf_set(ts, e, q);
            if value {
                yes.union_with(&inf);
            } else {
                no.union_with(&inf);
            }
        }
    }
    let m = msccs(ts, None);
    let mut accepting = StateSet::empty(n);
    let mut failed = false;
    for ci in m.nontrivial() {
        let comp = &m.components[ci];
        let has_no = !comp.is_disjoint(&no);
        if has_no && !comp.is_disjoint(&yes) {
            failed = true;
            break;
        }
        if !has_no {
            accepting.union_with(comp);
        }
    }
    if failed {
        return find_conflict(table, ts).map(Marking::Conflict);
    }
    let hypothesis = OmegaAutomaton::weak_buchi(ts.clone(), accepting)?;
    Ok(Marking::Consistent { hypothesis, yes, no })
}

/// The shortest loop `x` at `q` (earliest column on ties) such that `xω` is
/// a periodic column with entry `want` in row `q`. The loop is the column's
/// cycle repeated until the run returns to `q`.
fn qualifying_cycle(table: &ObservationTable, ts: &TransitionSystem, q: State, want: bool) -> Option<Word> {
    let row = table.row(&table.access_words()[q])?;
    table
        .experiments()
        .iter()
        .zip(row)
        .filter(|(e, &v)| v == want && e.is_periodic())
        .filter_map(|(e, _)| {
            let mut p = q;
            for j in 1..=ts.size() {
                p = ts.run_unchecked(p, e.cycle());
                if p == q {
                    return Some(e.cycle().repeat(j));
                }
            }
            None
        })
        .min_by_key(|x| x.len())
}

/// Picks the least access word `s` with a yes-cycle whose MSCC holds an
/// access word `t` with a no-cycle, taking the least such `t`.
fn find_conflict(table: &ObservationTable, ts: &TransitionSystem) -> Result<Conflict> {
    let m = msccs(ts, None);
    for s in ts.states() {
        let Some(x) = qualifying_cycle(table, ts, s, true) else {
            continue;
        };
        let Some(comp) = m.component(s) else {
            continue;
        };
        for t in comp.iter() {
            let Some(y) = qualifying_cycle(table, ts, t, false) else {
                continue;
            };
            let to_t = StateSet::from_states(ts.size(), [t]);
            let to_s = StateSet::from_states(ts.size(), [s]);
            let z = ts.shortest_path(s, &to_t, None).expect("same MSCC");
            let w = ts.shortest_path(t, &to_s, None).expect("same MSCC");
            let words = table.access_words();
            return Ok(Conflict {
                s: words[s].clone(),
                t: words[t].clone(),
                x,
                y,
                z,
                w,
            });
        }
    }
    Err(Error::Internal(
        "marking failed but no conflicting pair of access words was found".into(),
    ))
}
