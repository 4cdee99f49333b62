use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::ts::{State, TransitionSystem};

/// The reachable synchronous product of two transition systems.
#[derive(Debug, Clone)]
pub struct Product {
    pub ts: TransitionSystem,
    /// Projection of each product state onto the first factor.
    pub left: Vec<State>,
    /// Projection of each product state onto the second factor.
    pub right: Vec<State>,
}

/// Product of `ts1` and `ts2` started in their initial states.
pub fn product(ts1: &TransitionSystem, ts2: &TransitionSystem) -> Result<Product> {
    product_from(ts1, ts1.initial(), ts2, ts2.initial())
}

/// Product of `ts1` and `ts2` started in `(start1, start2)`, restricted to
/// the reachable pairs. States are numbered in breadth-first order.
pub fn product_from(
    ts1: &TransitionSystem,
    start1: State,
    ts2: &TransitionSystem,
    start2: State,
) -> Result<Product> {
    if ts1.alphabet() != ts2.alphabet() {
        return Err(Error::InvalidArgument(format!(
            "alphabet mismatch: {} vs {}",
            ts1.alphabet(),
            ts2.alphabet()
        )));
    }
    let sigma = ts1.alphabet();
    let mut index: HashMap<(State, State), State> = HashMap::new();
    let mut pairs = vec![(start1, start2)];
    index.insert((start1, start2), 0);
    let mut delta: Vec<Vec<State>> = Vec::new();
    let mut queue = VecDeque::from([0]);
    while let Some(i) = queue.pop_front() {
        let (p, q) = pairs[i];
        let mut row = Vec::with_capacity(sigma.len());
        for a in sigma.letters() {
            let next = (ts1.succ(p, a), ts2.succ(q, a));
            let j = *index.entry(next).or_insert_with(|| {
                pairs.push(next);
                queue.push_back(pairs.len() - 1);
                pairs.len() - 1
            });
            row.push(j);
        }
        if delta.len() <= i {
            delta.resize(i + 1, Vec::new());
        }
        delta[i] = row;
    }
    let names = pairs
        .iter()
        .map(|&(p, q)| format!("({},{})", ts1.name(p), ts2.name(q)))
        .collect();
    let ts = TransitionSystem::new(sigma.clone(), names, 0, delta)?;
    Ok(Product {
        ts,
        left: pairs.iter().map(|&(p, _)| p).collect(),
        right: pairs.iter().map(|&(_, q)| q).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::fixtures;

    #[test]
    fn unit_factor_is_identity() {
        let a = fixtures::four_priority_dpa();
        let one = TransitionSystem::new(a.alphabet().clone(), vec!["*".into()], 0, vec![vec![0, 0]])
            .unwrap();
        let p = product(a.ts(), &one).unwrap();
        assert!(p.ts.is_isomorphic(a.ts()));
        assert!(p.ts.size() <= a.size());
        // projections are homomorphisms
        assert!(p.ts.check_homomorphism(a.ts(), &p.left).is_ok());
        assert!(p.ts.check_homomorphism(&one, &p.right).is_ok());
    }

    #[test]
    fn h1_times_dontcare() {
        let h1 = fixtures::learning_h1();
        let d = fixtures::dontcare_suffix_b(&Alphabet::from_chars("ab").unwrap());
        let p = product(&h1, d.ts()).unwrap();
        assert!(p.ts.size() <= h1.size() * d.size());
        assert!(p.ts.size() <= 6);
    }

    #[test]
    fn alphabet_mismatch() {
        let a = fixtures::four_priority_dpa();
        let b = fixtures::dba_a();
        assert!(matches!(product(a.ts(), b.ts()), Err(Error::InvalidArgument(_))));
    }
}
