//! Simple undirected graphs with stable vertex and edge indexing.
//!
//! Vertices are `0..n`, edges are `0..m` in insertion order. Every other
//! module addresses edges by index, so a [`Graph`] never reorders them.

mod bridges;
mod edge_list;
mod graph6;
mod matching;

pub use bridges::bridges;
pub use edge_list::{parse_edge_list, to_edge_list};
pub use graph6::{parse_graph6, to_graph6};
pub use matching::has_perfect_matching;

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::BitVec;
use crate::error::{Error, Result};

pub type Vertex = usize;
pub type EdgeId = usize;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<(Vertex, EdgeId)>>,
}

impl Graph {
    /// Builds a simple graph. Endpoints are stored as `(min, max)`.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut g = Graph { n, edges: Vec::new(), adj: vec![Vec::new(); n] };
        let mut seen = HashSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Input(format!("edge ({u},{v}) out of range for {n} vertices")));
            }
            if u == v {
                return Err(Error::Input(format!("self-loop at vertex {u}")));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::Input(format!("duplicate edge ({},{})", key.0, key.1)));
            }
            g.push_edge_unchecked(key.0, key.1);
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Self {
        Graph { n, edges: Vec::new(), adj: vec![Vec::new(); n] }
    }

    fn push_edge_unchecked(&mut self, u: Vertex, v: Vertex) {
        let e = self.edges.len();
        self.edges.push((u, v));
        self.adj[u].push((v, e));
        self.adj[v].push((u, e));
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    /// `(neighbor, edge)` pairs at `v`.
    #[inline]
    pub fn incident(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> Result<usize> {
        if v >= self.n {
            return Err(Error::Input(format!("vertex {v} out of range for {} vertices", self.n)));
        }
        Ok(self.adj[v].len())
    }

    #[inline]
    pub(crate) fn deg(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// `(δ, Δ)`.
    pub fn min_max_degree(&self) -> Result<(usize, usize)> {
        if self.n == 0 {
            return Err(Error::Input("graph has no vertices".into()));
        }
        let d = self.degrees();
        Ok((*d.iter().min().unwrap(), *d.iter().max().unwrap()))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `Some(r)` when every vertex has degree `r`.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.adj.first()?.len();
        self.adj.iter().all(|a| a.len() == first).then_some(first)
    }

    pub fn find_edge(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        if u >= self.n || v >= self.n {
            return None;
        }
        self.adj[u].iter().find(|&&(w, _)| w == v).map(|&(_, e)| e)
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<Vertex>> {
        self.components_avoiding(None)
    }

    pub(crate) fn components_avoiding(&self, skip: Option<EdgeId>) -> Vec<Vec<Vertex>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &(w, e) in &self.adj[v] {
                    if Some(e) == skip || comp[w] != usize::MAX {
                        continue;
                    }
                    comp[w] = id;
                    members.push(w);
                    stack.push(w);
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`, its edges appended.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = self.clone();
        g.n += other.n;
        g.adj.extend(std::iter::repeat_with(Vec::new).take(other.n));
        for &(u, v) in &other.edges {
            g.push_edge_unchecked(u + self.n, v + self.n);
        }
        g
    }

    /// Adds a fresh vertex joined to each of `targets`, returning the extended graph.
    pub fn with_apex(&self, targets: &[Vertex]) -> Result<Graph> {
        let mut edges = self.edges.clone();
        edges.extend(targets.iter().map(|&t| (t, self.n)));
        Graph::from_edges(self.n + 1, edges)
    }

    pub fn edge_subset(&self) -> EdgeSubset {
        EdgeSubset(BitVec::zeros(self.m()))
    }

    /// Degree of every vertex inside the edge subset `s`.
    pub fn subset_degrees(&self, s: &EdgeSubset) -> Vec<usize> {
        assert_eq!(s.len(), self.m(), "edge subset length does not match graph");
        let mut d = vec![0; self.n];
        for e in s.iter() {
            let (u, v) = self.edges[e];
            d[u] += 1;
            d[v] += 1;
        }
        d
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// A set of edges of one graph, stored as a bit vector over edge indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeSubset(pub BitVec);

impl EdgeSubset {
    pub fn from_edges(m: usize, edges: impl IntoIterator<Item = EdgeId>) -> Self {
        EdgeSubset(BitVec::from_indices(m, edges))
    }

    pub fn all(m: usize) -> Self {
        EdgeSubset(BitVec::ones(m))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_zero()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.0.get(e)
    }

    pub fn insert(&mut self, e: EdgeId) {
        self.0.set(e, true)
    }

    pub fn count(&self) -> usize {
        self.0.count_ones()
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.0.iter_ones()
    }

    pub fn to_vec(&self) -> Vec<EdgeId> {
        self.iter().collect()
    }
}

impl fmt::Debug for EdgeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for EdgeSubset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire {
            m: usize,
            edges: Vec<EdgeId>,
        }
        Wire { m: self.len(), edges: self.to_vec() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for EdgeSubset {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            m: usize,
            edges: Vec<EdgeId>,
        }
        let w = Wire::deserialize(d)?;
        if let Some(&bad) = w.edges.iter().find(|&&e| e >= w.m) {
            return Err(serde::de::Error::custom(format!("edge index {bad} out of range {}", w.m)));
        }
        Ok(EdgeSubset::from_edges(w.m, w.edges))
    }
}

/// Small named graphs used throughout tests, examples and the reproduction table.
pub mod named {
    use super::Graph;

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).expect("complete graph is simple")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star is simple")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges = (0..a).flat_map(|u| (0..b).map(move |v| (u, a + v)));
        Graph::from_edges(a + b, edges).expect("complete bipartite graph is simple")
    }

    /// Outer 5-cycle 0..5, spokes i–(i+5), inner pentagram on 5..10.
    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
        }
        for i in 0..5 {
            edges.push((i, i + 5));
        }
        for i in 0..5 {
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, edges).expect("Petersen graph is simple")
    }

    /// Circulant graph on `n` vertices with the given jumps (each `1 <= s <= n/2`).
    pub fn circulant(n: usize, jumps: &[usize]) -> Graph {
        let mut edges = Vec::new();
        for &s in jumps {
            assert!(s >= 1 && 2 * s <= n, "jump {s} invalid for n={n}");
            let count = if 2 * s == n { n / 2 } else { n };
            for i in 0..count {
                edges.push((i, (i + s) % n));
            }
        }
        Graph::from_edges(n, edges).expect("circulant jumps are distinct")
    }
}
