use std::collections::BTreeSet;

use crate::automaton::{OmegaAutomaton, Priority};
use crate::error::{Error, Result};
use crate::langops::empty_dontcare;
use crate::product::product;
use crate::stateset::StateSet;
use crate::ts::{Homomorphism, State, TransitionSystem};

use super::oracle::{Family, SubsetParityOracle};

/// Largest product size [`ExplicitFamilies::enumerate`] accepts.
pub const MAX_ENUMERATED_PRODUCT: usize = 20;

/// Largest number of candidate maps [`brute_force_consistent_parity`] tries
/// per shift.
pub const MAX_BRUTE_FORCE_MAPS: u64 = 10_000_000;

/// Two families of state sets listed explicitly.
#[derive(Debug, Clone)]
pub struct ExplicitFamilies {
    system: TransitionSystem,
    accepting: Vec<StateSet>,
    rejecting: Vec<StateSet>,
}

/// Whether `set` is non-empty and strongly connected by a path of at least
/// one transition inside `set`.
pub(crate) fn is_strongly_connected(ts: &TransitionSystem, set: &StateSet) -> bool {
    let Some(start) = set.first() else {
        return false;
    };
    let reach = |forward: bool| {
        let mut seen = StateSet::empty(ts.size());
        let mut stack = vec![start];
        let mut looped = false;
        while let Some(q) = stack.pop() {
            for p in set.iter() {
                let edge = if forward {
                    ts.successors(q).contains(&p)
                } else {
                    ts.successors(p).contains(&q)
                };
                if edge {
                    if p == start {
                        looped = true;
                    }
                    if !seen.contains(p) {
                        seen.insert(p);
                        stack.push(p);
                    }
                }
            }
        }
        seen.insert(start);
        (seen, looped)
    };
    let (fwd, looped) = reach(true);
    let (bwd, _) = reach(false);
    looped && fwd == *set && bwd == *set
}

impl ExplicitFamilies {
    /// Every member must be a strongly connected set of states of `system`.
    pub fn new(system: TransitionSystem, accepting: Vec<StateSet>, rejecting: Vec<StateSet>) -> Result<Self> {
        for s in accepting.iter().chain(&rejecting) {
            if s.capacity() != system.size() {
                return Err(Error::InvalidArgument(format!(
                    "family member {s:?} has capacity {} but the system has {} states",
                    s.capacity(),
                    system.size()
                )));
            }
            if !is_strongly_connected(&system, s) {
                return Err(Error::InvalidArgument(format!(
                    "family member {s:?} is not strongly connected"
                )));
            }
        }
        let dedup = |v: Vec<StateSet>| v.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        Ok(Self {
            system,
            accepting: dedup(accepting),
            rejecting: dedup(rejecting),
        })
    }

    /// Lists the families induced by `a`, `dontcare` and `h` by trying every
    /// subset of the product `A × D`. Slow by design; it is the reference the
    /// SCC-based oracle is tested against.
    pub fn enumerate(
        a: &OmegaAutomaton,
        dontcare: Option<&OmegaAutomaton>,
        target: &TransitionSystem,
        h: &Homomorphism,
    ) -> Result<Self> {
        a.ts().check_homomorphism(target, h.as_slice())?;
        let empty;
        let d = match dontcare {
            Some(d) => d,
            None => {
                empty = empty_dontcare(a.alphabet());
                &empty
            }
        };
        let prod = product(a.ts(), d.ts())?;
        let n = prod.ts.size();
        if n > MAX_ENUMERATED_PRODUCT {
            return Err(Error::ResourceLimit(format!(
                "product has {n} states, explicit enumeration allows at most {MAX_ENUMERATED_PRODUCT}"
            )));
        }
        let (cp, dp) = (a.priorities(), d.priorities());
        let mut accepting = BTreeSet::new();
        let mut rejecting = BTreeSet::new();
        for mask in 1u32..(1u32 << n) {
            let set = StateSet::from_states(n, (0..n).filter(|&s| mask & (1 << s) != 0));
            if !is_strongly_connected(&prod.ts, &set) {
                continue;
            }
            let max_d = set.iter().map(|s| dp[prod.right[s]]).max().unwrap_or(0);
            if max_d % 2 == 0 {
                continue;
            }
            let max_c = set.iter().map(|s| cp[prod.left[s]]).max().unwrap_or(0);
            let image = set.map(target.size(), |s| h.apply(prod.left[s]));
            if max_c % 2 == 0 {
                accepting.insert(image);
            } else {
                rejecting.insert(image);
            }
        }
        Ok(Self {
            system: target.clone(),
            accepting: accepting.into_iter().collect(),
            rejecting: rejecting.into_iter().collect(),
        })
    }

    pub fn accepting(&self) -> &[StateSet] {
        &self.accepting
    }

    pub fn rejecting(&self) -> &[StateSet] {
        &self.rejecting
    }

    pub fn family(&self, family: Family) -> &[StateSet] {
        match family {
            Family::Accepting => &self.accepting,
            Family::Rejecting => &self.rejecting,
        }
    }

    /// Whether `priorities` gives every accepting member an even maximum and
    /// every rejecting member an odd one.
    pub fn is_consistent(&self, priorities: &[Priority]) -> bool {
        let max = |s: &StateSet| s.iter().map(|q| priorities[q]).max().unwrap_or(0);
        self.accepting.iter().all(|s| max(s) % 2 == 0) && self.rejecting.iter().all(|s| max(s) % 2 == 1)
    }
}

impl SubsetParityOracle for ExplicitFamilies {
    fn system(&self) -> &TransitionSystem {
        &self.system
    }

    fn subset_union(&self, subset: &StateSet, family: Family) -> StateSet {
        let mut out = StateSet::empty(self.system.size());
        for s in self.family(family) {
            if s.is_subset(subset) {
                out.union_with(s);
            }
        }
        out
    }
}

/// Searches all maps into `{0..k-1}` and then `{1..k}` for one consistent
/// with `families`.
pub fn brute_force_consistent_parity(families: &ExplicitFamilies, k: usize) -> Result<Option<Vec<Priority>>> {
    let n = families.system.size();
    if k == 0 {
        return Ok(None);
    }
    let total = (k as u64).checked_pow(n as u32).filter(|&t| t <= MAX_BRUTE_FORCE_MAPS);
    let Some(total) = total else {
        return Err(Error::ResourceLimit(format!(
            "{k}^{n} candidate maps exceed the limit of {MAX_BRUTE_FORCE_MAPS}"
        )));
    };
    for shift in [0, 1] {
        let mut digits: Vec<State> = vec![0; n];
        for _ in 0..total {
            let map: Vec<Priority> = digits.iter().map(|&d| (d + shift) as Priority).collect();
            if families.is_consistent(&map) {
                return Ok(Some(map));
            }
            for d in digits.iter_mut() {
                *d += 1;
                if *d < k {
                    break;
                }
                *d = 0;
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn four_priority_families() -> ExplicitFamilies {
        let a = fixtures::four_priority_dpa();
        let d = fixtures::eventually_a();
        ExplicitFamilies::enumerate(&a, Some(&d), a.ts(), &Homomorphism::identity(a.ts())).unwrap()
    }

    #[test]
    fn four_priority_dpa_needs_three() {
        let f = four_priority_families();
        assert_eq!(brute_force_consistent_parity(&f, 2).unwrap(), None);
        let m = brute_force_consistent_parity(&f, 3).unwrap().unwrap();
        assert!(f.is_consistent(&m));
        assert!(f.is_consistent(&[0, 0, 1, 2]));
    }

    #[test]
    fn strong_connectivity() {
        let ts = fixtures::learning_h1();
        assert!(is_strongly_connected(&ts, &StateSet::from_states(2, [0])));
        assert!(is_strongly_connected(&ts, &StateSet::from_states(2, [0, 1])));
        let a = fixtures::dba_a();
        // the initial state has no self-loop
        assert!(!is_strongly_connected(a.ts(), &StateSet::from_states(3, [0])));
        assert!(!is_strongly_connected(a.ts(), &StateSet::empty(3)));
    }

    #[test]
    fn explicit_union_matches_scc_oracle() {
        let a = fixtures::four_priority_dpa();
        let d = fixtures::eventually_a();
        let id = Homomorphism::identity(a.ts());
        let o = crate::priority::build_family_oracle(&a, Some(&d), a.ts(), &id).unwrap();
        let f = four_priority_families();
        for mask in 0u32..16 {
            let s = StateSet::from_states(4, (0..4).filter(|&q| mask & (1 << q) != 0));
            for fam in [Family::Accepting, Family::Rejecting] {
                assert_eq!(o.subset_union(&s, fam), f.subset_union(&s, fam), "{s:?} {fam:?}");
            }
        }
    }

    #[test]
    fn limit_is_enforced() {
        let f = four_priority_families();
        assert!(matches!(brute_force_consistent_parity(&f, 100_000), Err(Error::ResourceLimit(_))));
    }
}
