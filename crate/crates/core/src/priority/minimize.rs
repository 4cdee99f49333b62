use crate::automaton::{AcceptanceKind, OmegaAutomaton};
use crate::error::{Error, Result};
use crate::langops::congruence_quotient;
use crate::scc::msccs;
use crate::stateset::StateSet;
use crate::ts::{Homomorphism, TransitionSystem};

use super::chain::{consistent_parity_within, optimal_consistent_parity};
use super::oracle::{build_family_oracle, Family, SubsetParityOracle};

/// Replaces the priorities of `a` by an optimal map that agrees with `a` on
/// every word outside the don't-care language.
pub fn optimize_priorities(a: &OmegaAutomaton, dontcare: Option<&OmegaAutomaton>) -> Result<OmegaAutomaton> {
    let id = Homomorphism::identity(a.ts());
    optimize_on_quotient(a, dontcare, a.ts(), &id)?
        .ok_or_else(|| Error::Internal("the input priorities are consistent, yet no parity map was found".into()))
}

/// A parity automaton on `target` that is equivalent to `a` outside the
/// don't-care language, with the least number of priorities; `None` if no
/// parity condition on `target` works.
pub fn optimize_on_quotient(
    a: &OmegaAutomaton,
    dontcare: Option<&OmegaAutomaton>,
    target: &TransitionSystem,
    h: &Homomorphism,
) -> Result<Option<OmegaAutomaton>> {
    let oracle = build_family_oracle(a, dontcare, target, h)?;
    match optimal_consistent_parity(&oracle) {
        Ok(chain) => OmegaAutomaton::parity(target.clone(), chain.priorities).map(Some),
        Err(np) => {
            log::debug!("{np}");
            Ok(None)
        }
    }
}

/// An automaton of the requested kind on the D-congruence quotient of `a`,
/// or `None` if the language is not in the corresponding class.
///
/// `dontcare` must have a trivial right-congruence.
pub fn minimize_to_irc(
    a: &OmegaAutomaton,
    dontcare: Option<&OmegaAutomaton>,
    kind: AcceptanceKind,
) -> Result<Option<OmegaAutomaton>> {
    let (ts, h) = congruence_quotient(a, dontcare)?;
    let oracle = build_family_oracle(a, dontcare, &ts, &h)?;
    let priorities = match consistent_parity_within(&oracle, kind) {
        Ok(Some(p)) => p,
        Ok(None) => return Ok(None),
        Err(np) => {
            log::debug!("{np}");
            return Ok(None);
        }
    };
    let result = match kind {
        AcceptanceKind::Buchi => {
            let acc = StateSet::from_states(ts.size(), ts.states().filter(|&q| priorities[q] == 2));
            OmegaAutomaton::buchi(ts, acc)?
        }
        AcceptanceKind::CoBuchi | AcceptanceKind::Parity => OmegaAutomaton::parity(ts, priorities)?,
    };
    Ok(Some(result))
}

/// The D-minimal weak deterministic Büchi automaton for the language of `w`.
///
/// `w` must be weak and `dontcare` must have a trivial right-congruence. An
/// MSCC of the quotient that no relevant word visits is made rejecting.
pub fn minimize_wdba(w: &OmegaAutomaton, dontcare: Option<&OmegaAutomaton>) -> Result<OmegaAutomaton> {
    if let Some(bad) = w.weakness_violation() {
        return Err(Error::Precondition(format!(
            "automaton is not weak: component {bad:?} mixes accepting and rejecting states"
        )));
    }
    let (ts, h) = congruence_quotient(w, dontcare)?;
    let oracle = build_family_oracle(w, dontcare, &ts, &h)?;
    let m = msccs(&ts, None);
    let mut accepting = StateSet::empty(ts.size());
    for ci in m.nontrivial() {
        let comp = &m.components[ci];
        let acc = !oracle.subset_union(comp, Family::Accepting).is_empty();
        let rej = !oracle.subset_union(comp, Family::Rejecting).is_empty();
        if acc && rej {
            return Err(Error::Internal(format!(
                "quotient component {comp:?} carries both accepting and rejecting runs"
            )));
        }
        if acc {
            accepting.union_with(comp);
        }
    }
    OmegaAutomaton::weak_buchi(ts, accepting)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::langops::d_equivalent;

    #[test]
    fn four_priority_optimized() {
        let a = fixtures::four_priority_dpa();
        let d = fixtures::eventually_a();
        let o = optimize_priorities(&a, Some(&d)).unwrap();
        assert_eq!(o.priorities(), vec![0, 0, 1, 2]);
        assert!(d_equivalent(&a, &o, Some(&d)).unwrap().is_none());
        // without don't-cares nothing can be saved
        let plain = optimize_priorities(&a, None).unwrap();
        assert_eq!(plain.distinct_priorities(), 4);
    }

    #[test]
    fn single_state_quotient_is_absent() {
        let a = fixtures::four_priority_dpa();
        let one = TransitionSystem::new(fixtures::ab(), vec!["q".into()], 0, vec![vec![0, 0]]).unwrap();
        let h = Homomorphism::new(a.ts(), &one, vec![0; 4]).unwrap();
        assert!(optimize_on_quotient(&a, None, &one, &h).unwrap().is_none());
    }

    #[test]
    fn dba_a_is_buchi_minimal() {
        let a = fixtures::dba_a();
        let m = minimize_to_irc(&a, None, AcceptanceKind::Buchi).unwrap().unwrap();
        assert!(m.ts().is_isomorphic(a.ts()));
        assert!(d_equivalent(&a, &m, None).unwrap().is_none());
        assert!(minimize_to_irc(&a, None, AcceptanceKind::Parity).unwrap().is_some());
    }

    #[test]
    fn redundant_split_collapses_to_h3() {
        let u = fixtures::learning_h3_split();
        let d = fixtures::learning_dontcare();
        let m = minimize_wdba(&u, Some(&d)).unwrap();
        assert_eq!(m.size(), 5);
        assert!(m.ts().is_isomorphic(fixtures::learning_h3().ts()));
        assert!(m.is_weak());
        assert!(d_equivalent(&u, &m, Some(&d)).unwrap().is_none());
    }

    #[test]
    fn non_weak_input_is_refused() {
        let a = fixtures::dba_a();
        assert!(matches!(minimize_wdba(&a, None), Err(Error::Precondition(_))));
    }
}
