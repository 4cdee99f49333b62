use crate::error::{Error, Result};
use crate::ts::{Homomorphism, State, TransitionSystem};

/// Quotient of `ts` by the partition `classes` (state → class id).
///
/// Class ids must be dense (`0..m`, every id used); quotient state `i` is
/// class `i` and is named after the first state of the class. Fails with a
/// precondition violation naming a witnessing state pair and letter if the
/// partition is not a congruence.
pub fn quotient(ts: &TransitionSystem, classes: &[usize]) -> Result<(TransitionSystem, Homomorphism)> {
    if classes.len() != ts.size() {
        return Err(Error::InvalidArgument("partition does not cover the state range".into()));
    }
    let m = classes.iter().copied().max().map_or(0, |x| x + 1);
    let mut rep: Vec<Option<State>> = vec![None; m];
    for q in ts.states() {
        rep[classes[q]].get_or_insert(q);
    }
    if rep.iter().any(Option::is_none) {
        return Err(Error::InvalidArgument("class ids are not dense".into()));
    }
    let rep: Vec<State> = rep.into_iter().map(Option::unwrap).collect();
    for q in ts.states() {
        let r = rep[classes[q]];
        for a in ts.alphabet().letters() {
            if classes[ts.succ(q, a)] != classes[ts.succ(r, a)] {
                return Err(Error::Precondition(format!(
                    "partition is not a congruence: {} and {} disagree on letter {}",
                    ts.name(r),
                    ts.name(q),
                    ts.alphabet().symbol(a)
                )));
            }
        }
    }
    let delta = rep
        .iter()
        .map(|&r| ts.successors(r).iter().map(|&p| classes[p]).collect())
        .collect();
    let names = rep.iter().map(|&r| ts.name(r).to_string()).collect();
    let q = TransitionSystem::new(ts.alphabet().clone(), names, classes[ts.initial()], delta)?;
    let h = Homomorphism::new(ts, &q, classes.to_vec())?;
    Ok((q, h))
}
