use crate::stateset::StateSet;
use crate::ts::{State, TransitionSystem};

/// Decomposition of (a restriction of) a transition system into maximal
/// strongly connected components.
#[derive(Debug, Clone)]
pub struct Msccs {
    /// Components in reverse topological order: a component is listed before
    /// every component that can reach it.
    pub components: Vec<StateSet>,
    /// Component index of each state, `None` for states outside the restriction.
    pub component_of: Vec<Option<usize>>,
    /// `transient[i]` is true if component `i` is a single state without a
    /// transition to itself inside the restriction.
    pub transient: Vec<bool>,
}

impl Msccs {
    /// Indices of the non-transient components.
    pub fn nontrivial(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.components.len()).filter(|&i| !self.transient[i])
    }

    pub fn component(&self, q: State) -> Option<&StateSet> {
        self.component_of[q].map(|i| &self.components[i])
    }

    pub fn is_transient_state(&self, q: State) -> bool {
        self.component_of[q].is_none_or(|i| self.transient[i])
    }
}

/// Tarjan's algorithm (iterative) on the subgraph induced by `restrict`
/// (all states if `None`).
pub fn msccs(ts: &TransitionSystem, restrict: Option<&StateSet>) -> Msccs {
    let n = ts.size();
    let k = ts.alphabet().len();
    let inside = |q: State| restrict.is_none_or(|r| r.contains(q));

    const UNVISITED: usize = usize::MAX;
    let mut index = vec![UNVISITED; n];
    let mut lowlink = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<State> = Vec::new();
    let mut next_index = 0;

    let mut components = Vec::new();
    let mut component_of = vec![None; n];
    let mut transient = Vec::new();

    // call stack of (state, next letter to explore)
    let mut calls: Vec<(State, usize)> = Vec::new();
    for root in 0..n {
        if !inside(root) || index[root] != UNVISITED {
            continue;
        }
        calls.push((root, 0));
        index[root] = next_index;
        lowlink[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&(q, letter)) = calls.last() {
            if letter < k {
                let p = ts.succ(q, letter);
                calls.last_mut().unwrap().1 += 1;
                if !inside(p) {
                    continue;
                }
                if index[p] == UNVISITED {
                    index[p] = next_index;
                    lowlink[p] = next_index;
                    next_index += 1;
                    stack.push(p);
                    on_stack[p] = true;
                    calls.push((p, 0));
                } else if on_stack[p] {
                    lowlink[q] = lowlink[q].min(index[p]);
                }
                continue;
            }
            calls.pop();
            if let Some(&(parent, _)) = calls.last() {
                lowlink[parent] = lowlink[parent].min(lowlink[q]);
            }
            if lowlink[q] == index[q] {
                let id = components.len();
                let mut set = StateSet::empty(n);
                loop {
                    let p = stack.pop().expect("tarjan stack");
                    on_stack[p] = false;
                    set.insert(p);
                    component_of[p] = Some(id);
                    if p == q {
                        break;
                    }
                }
                let single = set.len() == 1 && !ts.successors(q).contains(&q);
                transient.push(single);
                components.push(set);
            }
        }
    }

    Msccs {
        components,
        component_of,
        transient,
    }
}
