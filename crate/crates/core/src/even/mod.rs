//! Even subgraphs: the GF(2) cycle space and the decision procedure for a
//! spanning even subgraph in which every vertex has degree at least 2.

mod search;

pub use search::{spanning_even_no_isolated, spanning_even_with, SearchOptions};

use serde::{Deserialize, Serialize};

use crate::graph::{bridges, EdgeId, EdgeSubset, Graph, Vertex};

/// Fundamental cycles of a BFS spanning forest.
#[derive(Clone, Debug)]
pub struct CycleSpaceBasis {
    pub basis: Vec<EdgeSubset>,
}

impl CycleSpaceBasis {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// XOR of the basis vectors selected by the low bits of `mask`.
    pub fn combination(&self, m: usize, mask: u64) -> EdgeSubset {
        let mut out = EdgeSubset::from_edges(m, []);
        for (i, b) in self.basis.iter().enumerate() {
            if mask >> i & 1 == 1 {
                out.0.xor_assign(&b.0);
            }
        }
        out
    }
}

pub fn cycle_space_basis(g: &Graph) -> CycleSpaceBasis {
    let n = g.n();
    let mut parent: Vec<Option<(Vertex, EdgeId)>> = vec![None; n];
    let mut depth = vec![usize::MAX; n];
    let mut tree_edge = vec![false; g.m()];
    for root in 0..n {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &(w, e) in g.incident(v) {
                if depth[w] == usize::MAX {
                    depth[w] = depth[v] + 1;
                    parent[w] = Some((v, e));
                    tree_edge[e] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut basis = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if tree_edge[e] {
            continue;
        }
        let mut cycle = g.edge_subset();
        cycle.insert(e);
        let (mut a, mut b) = (u, v);
        while a != b {
            if depth[a] < depth[b] {
                std::mem::swap(&mut a, &mut b);
            }
            let (p, pe) = parent[a].expect("non-root vertex has a parent");
            cycle.0.toggle(pe);
            a = p;
        }
        basis.push(cycle);
    }
    CycleSpaceBasis { basis }
}

pub fn is_even_subgraph(g: &Graph, s: &EdgeSubset) -> bool {
    g.subset_degrees(s).iter().all(|d| d % 2 == 0)
}

/// Edge set claimed to induce a spanning even subgraph without isolated vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvenSubgraphWitness {
    pub edges: EdgeSubset,
}

impl EvenSubgraphWitness {
    /// Every vertex has even degree in the edge set.
    pub fn is_even(&self, g: &Graph) -> bool {
        self.edges.len() == g.m() && is_even_subgraph(g, &self.edges)
    }

    /// Every vertex has even degree at least 2.
    pub fn is_spanning_without_isolated(&self, g: &Graph) -> bool {
        self.edges.len() == g.m() && g.subset_degrees(&self.edges).iter().all(|&d| d >= 2 && d % 2 == 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum NoCertificate {
    /// Every edge at `vertex` is a bridge, so no even subgraph reaches it.
    Structural { vertex: Vertex, bridges: Vec<EdgeId> },
    /// Complete branch-and-bound over the cycle space found nothing.
    Exhaustive { nodes: u64, digest: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum EvenVerdict {
    Yes { witness: EvenSubgraphWitness },
    No { certificate: NoCertificate },
    Undecided { nodes: u64 },
}

impl EvenVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, EvenVerdict::Yes { .. })
    }

    pub fn is_no(&self) -> bool {
        matches!(self, EvenVerdict::No { .. })
    }
}

/// Vertex all of whose incident edges are bridges (including isolated vertices).
pub fn structural_no(g: &Graph) -> Option<NoCertificate> {
    let br = bridges(g);
    (0..g.n())
        .find(|&v| g.incident(v).iter().all(|&(_, e)| br.contains(e)))
        .map(|v| NoCertificate::Structural { vertex: v, bridges: g.incident(v).iter().map(|&(_, e)| e).collect() })
}

/// Re-checks a NO certificate from scratch. Structural certificates are checked
/// by removing each listed edge and recounting components; exhaustive ones by
/// repeating the search and comparing the trace digest.
pub fn verify_no_certificate(g: &Graph, cert: &NoCertificate) -> bool {
    match cert {
        NoCertificate::Structural { vertex, bridges } => {
            if *vertex >= g.n() {
                return false;
            }
            let mut listed = bridges.clone();
            listed.sort_unstable();
            let mut actual: Vec<EdgeId> = g.incident(*vertex).iter().map(|&(_, e)| e).collect();
            actual.sort_unstable();
            let base = g.connected_components().len();
            listed == actual && listed.iter().all(|&e| g.components_avoiding(Some(e)).len() > base)
        }
        NoCertificate::Exhaustive { .. } => {
            let opts = SearchOptions { node_limit: None };
            matches!(spanning_even_with(g, &opts), EvenVerdict::No { certificate } if &certificate == cert)
        }
    }
}
