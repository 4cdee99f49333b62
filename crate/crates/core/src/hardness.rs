//! Graph colouring as don't-care minimization: the automaton `A_G` whose
//! minimal D-equivalent automata correspond to colourings of `G`, the
//! don't-care DPA `D_G`, and brute-force helpers to check the
//! correspondence on small graphs.

use std::collections::BTreeSet;
use std::fmt;

use crate::alphabet::Alphabet;
use crate::automaton::{OmegaAutomaton, Priority};
use crate::error::{Error, Result};
use crate::stateset::StateSet;
use crate::ts::{State, TransitionSystem};
use crate::word::{inf_set, UpWord};

/// Largest search space the brute-force helpers accept.
pub const MAX_SEARCH: u64 = 10_000_000;

/// An undirected graph without self-loops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<String>,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new<V, S, E, T>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (T, T)>,
        T: AsRef<str>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut g = Graph {
            vertices,
            edges: BTreeSet::new(),
        };
        let mut seen = BTreeSet::new();
        for v in &g.vertices {
            if !seen.insert(v.as_str()) {
                return Err(Error::InvalidArgument(format!("duplicate vertex {v}")));
            }
        }
        for (u, v) in edges {
            let (u, v) = (u.as_ref(), v.as_ref());
            let iu = g.index_of(u).ok_or_else(|| Error::InvalidArgument(format!("unknown vertex {u}")))?;
            let iv = g.index_of(v).ok_or_else(|| Error::InvalidArgument(format!("unknown vertex {v}")))?;
            if iu == iv {
                return Err(Error::InvalidArgument(format!("self-loop on {u}")));
            }
            g.edges.insert((iu.min(iv), iu.max(iv)));
        }
        Ok(g)
    }

    /// The complete graph on `v1..vn`.
    pub fn complete(n: usize) -> Self {
        let names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
        let edges: Vec<(String, String)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| (names[i].clone(), names[j].clone()))
            .collect();
        Graph::new(names.clone(), edges).expect("complete graph")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    /// Edges as index pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    fn require_edge(&self) -> Result<()> {
        if self.edges.is_empty() {
            return Err(Error::InvalidArgument("graph has no edges".into()));
        }
        Ok(())
    }

    /// The alphabet `V ∪ {x_v}`: vertex letters first, then markers, both in
    /// vertex order.
    pub fn alphabet(&self) -> Result<Alphabet> {
        Alphabet::new(
            self.vertices
                .iter()
                .cloned()
                .chain(self.vertices.iter().map(|v| format!("x_{v}"))),
        )
    }
}

/// A vertex colouring with colours `1..=k`, indexed like the graph's
/// vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Result<Self> {
        if colors.contains(&0) {
            return Err(Error::InvalidArgument("colours start at 1".into()));
        }
        Ok(Coloring { colors })
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// The largest colour used.
    pub fn max_color(&self) -> usize {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    pub fn distinct_colors(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }

    /// The first edge whose endpoints share a colour.
    pub fn conflict(&self, g: &Graph) -> Option<(usize, usize)> {
        g.edges().find(|&(u, v)| self.colors[u] == self.colors[v])
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.vertex_count() && self.conflict(g).is_none()
    }

    fn check(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.vertex_count() {
            return Err(Error::InvalidArgument(format!(
                "colouring has {} entries for {} vertices",
                self.colors.len(),
                g.vertex_count()
            )));
        }
        if let Some((u, v)) = self.conflict(g) {
            return Err(Error::Precondition(format!(
                "edge ({}, {}) has both endpoints coloured {}",
                g.vertex(u),
                g.vertex(v),
                self.colors[u]
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.colors.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// The instance `(A_G, D_G)` for a graph with at least one edge.
///
/// `A_G` has the initial state `q_G` (priority 1) followed by one state per
/// vertex (priority 0). `D_G` has `q_x` (priority 4) and the reachable states
/// `(v,i)` with priority `i`.
pub fn build_reduction(g: &Graph) -> Result<(OmegaAutomaton, OmegaAutomaton)> {
    g.require_edge()?;
    let alphabet = g.alphabet()?;
    let n = g.vertex_count();
    let marker = |v: usize| n + v;

    // A_G: state 0 is q_G, state 1+u is vertex u
    let mut a_rows = vec![vec![0; 2 * n]; n + 1];
    for u in 0..n {
        a_rows[0][u] = 1 + u;
        a_rows[0][marker(u)] = 0;
        for v in 0..n {
            let to = if u == v { 1 + u } else { 0 };
            a_rows[1 + u][v] = to;
            a_rows[1 + u][marker(v)] = to;
        }
    }
    let a_names = std::iter::once("q_G".to_string()).chain(g.vertices.iter().cloned()).collect();
    let a_ts = TransitionSystem::new(alphabet.clone(), a_names, 0, a_rows)?;
    let mut a_prios = vec![0; n + 1];
    a_prios[0] = 1;
    let a = OmegaAutomaton::parity(a_ts, a_prios)?;

    // D_G: state 0 is q_x, state 1 + 3u + (i-1) is (u,i)
    let pair = |u: usize, i: usize| 1 + 3 * u + (i - 1);
    let mut d_rows = vec![vec![0; 2 * n]; 1 + 3 * n];
    let mut d_names = vec!["q_x".to_string()];
    let mut d_prios: Vec<Priority> = vec![4];
    for u in 0..n {
        for i in 1..=3 {
            d_names.push(format!("({},{i})", g.vertex(u)));
            d_prios.push(i as Priority);
        }
    }
    for v in 0..n {
        d_rows[0][v] = pair(v, 2);
    }
    for u in 0..n {
        for i in 1..=3 {
            let row = &mut d_rows[pair(u, i)];
            for v in 0..n {
                row[v] = if u == v {
                    pair(v, 1)
                } else if g.has_edge(u, v) {
                    pair(v, 3)
                } else {
                    pair(v, 2)
                };
            }
        }
    }
    let (d_ts, index) = TransitionSystem::trimmed(alphabet, d_names, 0, d_rows)?;
    let d_prios = index
        .iter()
        .zip(d_prios)
        .filter_map(|(kept, p)| kept.map(|_| p))
        .collect();
    let d = OmegaAutomaton::parity(d_ts, d_prios)?;
    Ok((a, d))
}

/// The DPA `A_col` with states `q0..qk` built from a proper colouring;
/// colours that no vertex uses give unreachable states, which are dropped.
pub fn build_colored_dpa(g: &Graph, col: &Coloring) -> Result<OmegaAutomaton> {
    col.check(g)?;
    let alphabet = g.alphabet()?;
    let n = g.vertex_count();
    let k = col.max_color();
    let mut rows = vec![vec![0; 2 * n]; k + 1];
    for v in 0..n {
        rows[0][v] = col.color(v);
        rows[0][n + v] = 0;
        for (i, row) in rows.iter_mut().enumerate().skip(1) {
            let to = if col.color(v) == i { i } else { 0 };
            row[v] = to;
            row[n + v] = to;
        }
    }
    let names = (0..=k).map(|i| format!("q{i}")).collect();
    let (ts, index) = TransitionSystem::trimmed(alphabet, names, 0, rows)?;
    let prios = (0..=k)
        .filter(|&i| index[i].is_some())
        .map(|i| if i == 0 { 1 } else { 0 })
        .collect();
    OmegaAutomaton::parity(ts, prios)
}

/// Reads a colouring off a DPA assumed D-equivalent to `A_G`: with an odd
/// state moved to index 0, vertex `v` gets the least index of an even state
/// visited infinitely often on `v^ω`.
///
/// `Ok(None)` if some `v^ω` visits no even state infinitely often.
pub fn extract_coloring(c: &OmegaAutomaton, g: &Graph) -> Result<Option<Coloring>> {
    if c.alphabet() != &g.alphabet()? {
        return Err(Error::InvalidArgument(
            "automaton alphabet differs from the graph's alphabet".into(),
        ));
    }
    let prios = c.priorities();
    let odd = (0..c.size()).find(|&q| prios[q] % 2 == 1).ok_or_else(|| {
        Error::Precondition("automaton has no odd state, so it accepts every word".into())
    })?;
    // swap `odd` and state 0
    let index = |q: State| {
        if q == odd {
            0
        } else if q == 0 {
            odd
        } else {
            q
        }
    };
    let mut colors = Vec::with_capacity(g.vertex_count());
    for v in 0..g.vertex_count() {
        let w = UpWord::periodic(&[v])?;
        let inf: StateSet = inf_set(c.ts(), &w, c.ts().initial());
        match inf.iter().filter(|&q| prios[q] % 2 == 0).map(index).min() {
            Some(i) => colors.push(i),
            None => return Ok(None),
        }
    }
    let col = Coloring::new(colors)?;
    if let Some((u, v)) = col.conflict(g) {
        return Err(Error::Precondition(format!(
            "extracted colouring is improper on edge ({}, {})",
            g.vertex(u),
            g.vertex(v)
        )));
    }
    Ok(Some(col))
}

fn guard(base: usize, exp: usize, what: &str) -> Result<u64> {
    (base as u64)
        .checked_pow(exp as u32)
        .filter(|&t| t <= MAX_SEARCH)
        .ok_or_else(|| Error::ResourceLimit(format!("{what}: {base}^{exp} exceeds {MAX_SEARCH}")))
}

/// The least `k ≤ kmax` admitting a proper colouring, with the
/// lexicographically first such colouring (first vertex most significant).
pub fn chromatic_number_bruteforce(g: &Graph, kmax: usize) -> Result<Option<(usize, Coloring)>> {
    let n = g.vertex_count();
    for k in 1..=kmax {
        let total = guard(k, n, "colouring search")?;
        let mut digits = vec![1; n];
        for _ in 0..total {
            let col = Coloring { colors: digits.clone() };
            if col.is_proper(g) {
                return Ok(Some((k, col)));
            }
            for d in digits.iter_mut().rev() {
                *d += 1;
                if *d <= k {
                    break;
                }
                *d = 1;
            }
        }
    }
    Ok(None)
}

/// All complete DBAs with `n` states over `alphabet` (initial state 0,
/// unreachable states trimmed), in a fixed order, that satisfy `pred`.
pub fn enumerate_dbas<F>(n: usize, alphabet: &Alphabet, pred: F) -> Result<DbaEnumeration<F>>
where
    F: FnMut(&OmegaAutomaton) -> bool,
{
    if n == 0 {
        return Err(Error::InvalidArgument("need at least one state".into()));
    }
    let tables = guard(n, n * alphabet.len(), "DBA enumeration")?;
    let total = tables
        .checked_mul(1 << n.min(63))
        .filter(|&t| t <= MAX_SEARCH)
        .ok_or_else(|| Error::ResourceLimit(format!("DBA enumeration over {n} states exceeds {MAX_SEARCH}")))?;
    Ok(DbaEnumeration {
        n,
        alphabet: alphabet.clone(),
        next: 0,
        total,
        pred,
    })
}

/// Iterator returned by [`enumerate_dbas`].
pub struct DbaEnumeration<F> {
    n: usize,
    alphabet: Alphabet,
    next: u64,
    total: u64,
    pred: F,
}

impl<F> DbaEnumeration<F> {
    /// Number of candidates before filtering.
    pub fn candidates(&self) -> u64 {
        self.total
    }

    fn build(&self, mut code: u64) -> OmegaAutomaton {
        let n = self.n;
        let acc_mask = code % (1 << n);
        code >>= n;
        let k = self.alphabet.len();
        let mut rows = vec![vec![0; k]; n];
        for row in rows.iter_mut() {
            for cell in row.iter_mut() {
                *cell = (code % n as u64) as State;
                code /= n as u64;
            }
        }
        let names = (0..n).map(|q| format!("q{q}")).collect();
        let (ts, index) =
            TransitionSystem::trimmed(self.alphabet.clone(), names, 0, rows).expect("well-formed table");
        let acc = StateSet::from_states(
            ts.size(),
            (0..n).filter(|&q| acc_mask & (1 << q) != 0).filter_map(|q| index[q]),
        );
        OmegaAutomaton::buchi(ts, acc).expect("matching accepting set")
    }
}

impl<F> Iterator for DbaEnumeration<F>
where
    F: FnMut(&OmegaAutomaton) -> bool,
{
    type Item = OmegaAutomaton;

    fn next(&mut self) -> Option<OmegaAutomaton> {
        while self.next < self.total {
            let aut = self.build(self.next);
            self.next += 1;
            if (self.pred)(&aut) {
                return Some(aut);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::langops::{congruence_quotient, d_equivalent, has_trivial_rc};

    #[test]
    fn star_instance_sizes() {
        let g = fixtures::star_graph();
        let (a, d) = build_reduction(&g).unwrap();
        assert_eq!(a.size(), 4);
        assert_eq!(a.alphabet().len(), 6);
        assert_eq!(d.size(), 10);
        assert!(has_trivial_rc(&d).unwrap());
        let (q, _) = congruence_quotient(&a, None).unwrap();
        assert_eq!(q.size(), 4);
    }

    #[test]
    fn edgeless_graph_is_rejected() {
        let g = Graph::new(["a", "b"], Vec::<(&str, &str)>::new()).unwrap();
        assert!(matches!(build_reduction(&g), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn star_coloring_round_trip() {
        let g = fixtures::star_graph();
        let (k, col) = chromatic_number_bruteforce(&g, 3).unwrap().unwrap();
        assert_eq!(k, 2);
        assert_eq!(col.colors(), &[1, 2, 2]);
        let (a, d) = build_reduction(&g).unwrap();
        let a_col = build_colored_dpa(&g, &col).unwrap();
        assert_eq!(a_col.size(), 3);
        assert!(d_equivalent(&a, &a_col, Some(&d)).unwrap().is_none());
        let back = extract_coloring(&a_col, &g).unwrap().unwrap();
        assert_eq!(back, col);
    }

    #[test]
    fn improper_coloring_names_the_edge() {
        let g = fixtures::star_graph();
        let bad = Coloring::new(vec![1, 1, 2]).unwrap();
        let err = build_colored_dpa(&g, &bad).unwrap_err();
        assert!(err.to_string().contains("(v1, v2)"), "{err}");
    }

    #[test]
    fn a_g_colors_itself() {
        let g = fixtures::star_graph();
        let (a, _) = build_reduction(&g).unwrap();
        let col = extract_coloring(&a, &g).unwrap().unwrap();
        assert_eq!(col.colors(), &[1, 2, 3]);
        let k3 = Graph::complete(3);
        let id = Coloring::new(vec![1, 2, 3]).unwrap();
        let (a3, _) = build_reduction(&k3).unwrap();
        assert!(build_colored_dpa(&k3, &id).unwrap().ts().is_isomorphic(a3.ts()));
        assert_eq!(chromatic_number_bruteforce(&k3, 3).unwrap().unwrap().0, 3);
    }

    #[test]
    fn dba_enumeration_count() {
        let all = enumerate_dbas(2, &fixtures::abc(), |_| true).unwrap();
        assert_eq!(all.candidates(), 256);
        assert_eq!(all.count(), 256);
        assert_eq!(enumerate_dbas(2, &fixtures::abc(), |_| false).unwrap().count(), 0);
        assert!(matches!(
            enumerate_dbas(5, &fixtures::abc(), |_| true),
            Err(Error::ResourceLimit(_))
        ));
    }
}
