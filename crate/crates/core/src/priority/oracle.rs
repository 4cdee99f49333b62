use std::cell::RefCell;
use std::collections::HashMap;

use crate::automaton::{OmegaAutomaton, Priority};
use crate::error::{Error, Result};
use crate::langops::empty_dontcare;
use crate::product::{product, Product};
use crate::scc::msccs;
use crate::stateset::StateSet;
use crate::ts::{Homomorphism, State, TransitionSystem};

/// Which family of infinity sets a query refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Images of infinity sets of accepted words outside `D` (parity 0).
    Accepting,
    /// Images of infinity sets of rejected words outside `D` (parity 1).
    Rejecting,
}

impl Family {
    pub fn parity(self) -> Priority {
        match self {
            Family::Accepting => 0,
            Family::Rejecting => 1,
        }
    }

    pub fn from_parity(p: Priority) -> Self {
        if p % 2 == 0 {
            Family::Accepting
        } else {
            Family::Rejecting
        }
    }

    pub fn opposite(self) -> Self {
        match self {
            Family::Accepting => Family::Rejecting,
            Family::Rejecting => Family::Accepting,
        }
    }
}

/// Access to a pair of families of state sets through union-of-subsets
/// queries.
pub trait SubsetParityOracle {
    /// The transition system the families live in.
    fn system(&self) -> &TransitionSystem;

    /// The union of all family members contained in `subset`.
    fn subset_union(&self, subset: &StateSet, family: Family) -> StateSet;
}

/// Subset-parity oracle for the families induced by a DPA `A`, a don't-care
/// DPA `D` and a homomorphism `h` from `A`'s transition system onto `T'`.
///
/// Queries are memoized. The memo uses interior mutability, so an oracle must
/// not be shared across threads without external locking.
#[derive(Debug)]
pub struct FamilyOracle {
    product: Product,
    c_hat: Vec<Priority>,
    d_hat: Vec<Priority>,
    h_hat: Vec<State>,
    target: TransitionSystem,
    c_range: Vec<Priority>,
    d_range: Vec<Priority>,
    memo: RefCell<HashMap<(StateSet, Family), StateSet>>,
}

fn value_range(values: &[Priority]) -> Vec<Priority> {
    let mut v = values.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

/// Builds the oracle over the reachable product `A × D`.
pub fn build_family_oracle(
    a: &OmegaAutomaton,
    dontcare: Option<&OmegaAutomaton>,
    target: &TransitionSystem,
    h: &Homomorphism,
) -> Result<FamilyOracle> {
    a.ts().check_homomorphism(target, h.as_slice())?;
    let empty;
    let d = match dontcare {
        Some(d) => d,
        None => {
            empty = empty_dontcare(a.alphabet());
            &empty
        }
    };
    if d.alphabet() != a.alphabet() {
        return Err(Error::InvalidArgument("don't-care automaton uses a different alphabet".into()));
    }
    let product = product(a.ts(), d.ts())?;
    let (cp, dp) = (a.priorities(), d.priorities());
    let c_hat: Vec<Priority> = product.left.iter().map(|&q| cp[q]).collect();
    let d_hat: Vec<Priority> = product.right.iter().map(|&q| dp[q]).collect();
    let h_hat = product.left.iter().map(|&q| h.apply(q)).collect();
    Ok(FamilyOracle {
        c_range: value_range(&c_hat),
        d_range: value_range(&d_hat),
        c_hat,
        d_hat,
        h_hat,
        target: target.clone(),
        product,
        memo: RefCell::new(HashMap::new()),
    })
}

impl FamilyOracle {
    /// The product `A × D` the oracle searches.
    pub fn product_system(&self) -> &TransitionSystem {
        &self.product.ts
    }

    /// Priorities `(ĉ, d̂)` of a product state.
    pub fn product_priorities(&self, s: State) -> (Priority, Priority) {
        (self.c_hat[s], self.d_hat[s])
    }

    /// Image of a product state in the target system.
    pub fn project(&self, s: State) -> State {
        self.h_hat[s]
    }

    fn compute(&self, subset: &StateSet, family: Family) -> StateSet {
        let n = self.product.ts.size();
        let mut union = StateSet::empty(self.target.size());
        for &i in self.c_range.iter().filter(|&&i| i % 2 == family.parity()) {
            for &j in self.d_range.iter().filter(|&&j| j % 2 == 1) {
                let allowed = StateSet::from_states(
                    n,
                    (0..n).filter(|&s| {
                        subset.contains(self.h_hat[s]) && self.c_hat[s] <= i && self.d_hat[s] <= j
                    }),
                );
                if allowed.is_empty() {
                    continue;
                }
                let m = msccs(&self.product.ts, Some(&allowed));
                for ci in m.nontrivial() {
                    let comp = &m.components[ci];
                    let max_c = comp.iter().map(|s| self.c_hat[s]).max();
                    let max_d = comp.iter().map(|s| self.d_hat[s]).max();
                    if max_c == Some(i) && max_d == Some(j) {
                        for s in comp.iter() {
                            union.insert(self.h_hat[s]);
                        }
                    }
                }
            }
        }
        union
    }
}

impl SubsetParityOracle for FamilyOracle {
    fn system(&self) -> &TransitionSystem {
        &self.target
    }

    fn subset_union(&self, subset: &StateSet, family: Family) -> StateSet {
        let key = (subset.clone(), family);
        if let Some(hit) = self.memo.borrow().get(&key) {
            return hit.clone();
        }
        let result = self.compute(subset, family);
        self.memo.borrow_mut().insert(key, result.clone());
        result
    }
}
