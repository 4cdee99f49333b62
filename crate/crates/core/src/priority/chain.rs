use std::fmt;

use crate::automaton::{AcceptanceKind, Priority};
use crate::scc::msccs;
use crate::stateset::StateSet;

use super::oracle::{Family, SubsetParityOracle};

/// One level of the peeling of a strongly connected region: the states that
/// receive the region's top priority, and the sub-regions below it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainNode {
    /// The region this node was computed for.
    pub region: StateSet,
    /// States on this level.
    pub level: StateSet,
    pub family: Family,
    pub children: Vec<ChainNode>,
    /// Number of levels on the longest branch.
    pub depth: usize,
}

impl ChainNode {
    fn assign(&self, value: Priority, out: &mut [Option<Priority>]) {
        for q in self.level.iter() {
            out[q] = Some(value);
        }
        for c in &self.children {
            c.assign(value - 1, out);
        }
    }

    fn parity(&self) -> Priority {
        self.family.parity()
    }
}

/// Result of the optimal peeling: one chain per non-transient MSCC of the
/// target system and the resulting priority map.
#[derive(Debug, Clone)]
pub struct ChainAssignment {
    pub roots: Vec<ChainNode>,
    pub priorities: Vec<Priority>,
    /// States occurring in some family member; the rest got the minimum
    /// priority.
    pub covered: StateSet,
}

impl ChainAssignment {
    pub fn distinct_priorities(&self) -> usize {
        let mut p = self.priorities.clone();
        p.sort_unstable();
        p.dedup();
        p.len()
    }
}

/// No parity condition is consistent with the families: inside `component`
/// both families cover everything.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotParity {
    pub component: StateSet,
}

impl fmt::Display for NotParity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "no consistent parity condition on component {:?}", self.component)
    }
}

impl std::error::Error for NotParity {}

/// Peels `region` with top family `family`. `Ok(None)` means the top level
/// would be empty, so this family cannot be on top.
fn peel<O: SubsetParityOracle + ?Sized>(
    oracle: &O,
    region: &StateSet,
    family: Family,
) -> Result<Option<ChainNode>, NotParity> {
    let below = oracle.subset_union(region, family.opposite());
    if below == *region {
        return Ok(None);
    }
    let level = region.difference(&below);
    let mut children = Vec::new();
    if !below.is_empty() {
        let m = msccs(oracle.system(), Some(&below));
        for ci in m.nontrivial() {
            let sub = &m.components[ci];
            match peel(oracle, sub, family.opposite())? {
                Some(node) => children.push(node),
                None => {
                    return Err(NotParity {
                        component: sub.clone(),
                    })
                }
            }
        }
    }
    let depth = 1 + children.iter().map(|c| c.depth).max().unwrap_or(0);
    Ok(Some(ChainNode {
        region: region.clone(),
        level,
        family,
        children,
        depth,
    }))
}

/// Both peeling options for every non-transient MSCC.
fn all_options<O: SubsetParityOracle + ?Sized>(oracle: &O) -> Result<Vec<Vec<ChainNode>>, NotParity> {
    let m = msccs(oracle.system(), None);
    let mut out = Vec::new();
    for ci in m.nontrivial() {
        let comp = &m.components[ci];
        let opts: Vec<ChainNode> = [Family::Accepting, Family::Rejecting]
            .into_iter()
            .filter_map(|f| peel(oracle, comp, f).transpose())
            .collect::<Result<_, _>>()?;
        if opts.is_empty() {
            return Err(NotParity {
                component: comp.clone(),
            });
        }
        out.push(opts);
    }
    Ok(out)
}

/// Levels needed by `node` below a top value of parity `top_parity`.
fn cost(node: &ChainNode, top_parity: Priority) -> usize {
    node.depth + usize::from(node.parity() != top_parity)
}

fn covered<O: SubsetParityOracle + ?Sized>(oracle: &O) -> StateSet {
    let all = StateSet::full(oracle.system().size());
    oracle
        .subset_union(&all, Family::Accepting)
        .union(&oracle.subset_union(&all, Family::Rejecting))
}

/// Places every component's cheapest option under the common top value `top`
/// and fills in the states no family member touches.
fn place<O: SubsetParityOracle + ?Sized>(
    oracle: &O,
    options: Vec<Vec<ChainNode>>,
    top: Priority,
) -> ChainAssignment {
    let n = oracle.system().size();
    let mut assigned = vec![None; n];
    let mut roots = Vec::new();
    for opts in options {
        let node = opts
            .into_iter()
            .min_by_key(|o| cost(o, top % 2))
            .expect("at least one option");
        let value = if node.parity() == top % 2 { top } else { top - 1 };
        node.assign(value, &mut assigned);
        roots.push(node);
    }
    let covered = covered(oracle);
    let min = (0..n)
        .filter(|&q| covered.contains(q))
        .filter_map(|q| assigned[q])
        .min()
        .unwrap_or(0);
    let priorities = (0..n)
        .map(|q| match assigned[q] {
            Some(p) if covered.contains(q) => p,
            _ => min,
        })
        .collect();
    ChainAssignment {
        roots,
        priorities,
        covered,
    }
}

/// A priority map consistent with the oracle's families using the least
/// possible number of priorities.
///
/// Every non-transient MSCC is peeled from the top: the states outside
/// `U_{1-t}(C)` form the top level with parity `t`, and each non-trivial MSCC
/// of the remainder is peeled with the opposite parity. Each level sits one
/// below its parent. All components share one top value; a component whose
/// top parity differs from it starts one lower.
pub fn optimal_consistent_parity<O: SubsetParityOracle + ?Sized>(
    oracle: &O,
) -> Result<ChainAssignment, NotParity> {
    let options = all_options(oracle)?;
    let needed = |top_parity: Priority| {
        options
            .iter()
            .map(|opts| opts.iter().map(|o| cost(o, top_parity)).min().unwrap_or(0))
            .max()
            .unwrap_or(0)
    };
    let (k, parity) = [0, 1]
        .into_iter()
        .map(|p| (needed(p), p))
        .min()
        .expect("two candidates");
    // smallest top value of the right parity leaving room for k levels
    let mut top = k.saturating_sub(1) as Priority;
    if top % 2 != parity {
        top += 1;
    }
    Ok(place(oracle, options, top))
}

/// A consistent priority map restricted to `{1,2}` (Büchi) or `{0,1}`
/// (co-Büchi); for [`AcceptanceKind::Parity`] this is the optimal map.
/// `Ok(None)` if the families admit a parity condition but not one of the
/// requested shape.
pub fn consistent_parity_within<O: SubsetParityOracle + ?Sized>(
    oracle: &O,
    kind: AcceptanceKind,
) -> Result<Option<Vec<Priority>>, NotParity> {
    let top = match kind {
        AcceptanceKind::Parity => return optimal_consistent_parity(oracle).map(|c| Some(c.priorities)),
        AcceptanceKind::Buchi => 2,
        AcceptanceKind::CoBuchi => 1,
    };
    let options = all_options(oracle)?;
    let fits = options
        .iter()
        .all(|opts| opts.iter().any(|o| cost(o, top % 2) <= 2));
    if !fits {
        return Ok(None);
    }
    let mut c = place(oracle, options, top);
    // uncovered states default to the bottom of the allowed range
    for p in c.priorities.iter_mut() {
        *p = (*p).max(top - 1);
    }
    Ok(Some(c.priorities))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::priority::{build_family_oracle, ExplicitFamilies};
    use crate::ts::{Homomorphism, TransitionSystem};

    #[test]
    fn four_priority_peeling() {
        let a = fixtures::four_priority_dpa();
        let d = fixtures::eventually_a();
        let o = build_family_oracle(&a, Some(&d), a.ts(), &Homomorphism::identity(a.ts())).unwrap();
        let c = optimal_consistent_parity(&o).unwrap();
        assert_eq!(c.priorities, vec![0, 0, 1, 2]);
        assert_eq!(c.distinct_priorities(), 3);
        assert_eq!(c.roots.len(), 1);
        assert_eq!(c.roots[0].depth, 3);
        // three levels: even on top, then odd, then even
        assert_eq!(c.roots[0].family, Family::Accepting);
        assert_eq!(consistent_parity_within(&o, AcceptanceKind::Buchi).unwrap(), None);
        assert_eq!(consistent_parity_within(&o, AcceptanceKind::CoBuchi).unwrap(), None);
    }

    fn clique2() -> TransitionSystem {
        let ab = fixtures::ab();
        TransitionSystem::new(ab, vec!["a".into(), "b".into()], 0, vec![vec![0, 1], vec![0, 1]]).unwrap()
    }

    #[test]
    fn non_parity_families() {
        let ts = clique2();
        let fam = ExplicitFamilies::new(
            ts,
            vec![StateSet::from_states(2, [0]), StateSet::from_states(2, [1])],
            vec![StateSet::from_states(2, [0, 1])],
        )
        .unwrap();
        let err = optimal_consistent_parity(&fam).unwrap_err();
        assert_eq!(err.component, StateSet::full(2));
    }

    #[test]
    fn empty_families_all_zero() {
        let fam = ExplicitFamilies::new(clique2(), vec![], vec![]).unwrap();
        let c = optimal_consistent_parity(&fam).unwrap();
        assert_eq!(c.priorities, vec![0, 0]);
        assert_eq!(
            consistent_parity_within(&fam, AcceptanceKind::Buchi).unwrap(),
            Some(vec![1, 1])
        );
    }
}
