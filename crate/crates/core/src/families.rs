//! Generators for odd-regular graphs with maximum palette index and for the
//! quadratic-growth families built from them.
//!
//! Generated edges are ordered branch by branch (lexicographic pairs inside a
//! branch), followed by center or apex edges.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bridges, to_graph6, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FamilyKind {
    BridgeStar,
    QuadraticUnion,
    ConnectedQuadratic,
}

impl std::str::FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().replace('-', "_").as_str() {
            "BRIDGE_STAR" => Ok(FamilyKind::BridgeStar),
            "QUADRATIC_UNION" => Ok(FamilyKind::QuadraticUnion),
            "CONNECTED_QUADRATIC" => Ok(FamilyKind::ConnectedQuadratic),
            other => Err(Error::Input(format!("unknown family kind `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub k: usize,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Input("family parameter k must be at least 1".into()));
        }
        Ok(FamilySpec { kind, k })
    }

    pub fn build(&self) -> Graph {
        match self.kind {
            FamilyKind::BridgeStar => bridge_star(self.k),
            FamilyKind::QuadraticUnion => quadratic_union(self.k).0,
            FamilyKind::ConnectedQuadratic => connected_quadratic(self.k),
        }
    }
}

/// `K_{2k+3}` minus the path `1–0–2` and the matching `{3,4}, {5,6}, …`:
/// vertex 0 has degree `2k`, every other vertex `2k+1`.
pub fn branch_graph(k: usize) -> Graph {
    assert!(k >= 1, "k must be at least 1");
    let n = 2 * k + 3;
    let removed = |u: usize, v: usize| (u == 0 && (v == 1 || v == 2)) || (u >= 3 && u % 2 == 1 && v == u + 1);
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !removed(u, v));
    Graph::from_edges(n, edges).expect("branch graph is simple")
}

/// Center vertex joined to vertex 0 of each of `2k+1` copies of [`branch_graph`].
/// The result is `(2k+1)`-regular and every center edge is a bridge.
pub fn bridge_star(k: usize) -> Graph {
    let branch = branch_graph(k);
    let copies = 2 * k + 1;
    let mut g = Graph::empty(0);
    for _ in 0..copies {
        g = g.disjoint_union(&branch);
    }
    let targets: Vec<usize> = (0..copies).map(|i| i * branch.n()).collect();
    g.with_apex(&targets).expect("center edges are new")
}

pub fn quadratic_prediction(k: usize) -> usize {
    k * k + 3 * k
}

/// Disjoint union of `bridge_star(1), …, bridge_star(k)` with its predicted
/// palette index `k² + 3k`.
pub fn quadratic_union(k: usize) -> (Graph, usize) {
    assert!(k >= 1, "k must be at least 1");
    let mut g = Graph::empty(0);
    for i in 1..=k {
        g = g.disjoint_union(&bridge_star(i));
    }
    let delta = 2 * k + 1;
    let predicted = quadratic_prediction(k);
    assert_eq!(g.max_degree(), delta);
    assert_eq!(4 * predicted, delta * delta + 4 * delta - 5);
    (g, predicted)
}

/// [`quadratic_union`] plus an apex adjacent to the smallest vertex of each component.
pub fn connected_quadratic(k: usize) -> Graph {
    let (h, _) = quadratic_union(k);
    let targets: Vec<usize> = h.connected_components().iter().map(|c| c[0]).collect();
    h.with_apex(&targets).expect("apex edges are new")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub kind: FamilyKind,
    pub k: usize,
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub components: usize,
    pub graph6: String,
    /// Exact palette index when the construction determines it.
    pub predicted_palette_index: Option<usize>,
    /// Strict lower bound on the palette index when only that is known.
    pub palette_index_greater_than: Option<usize>,
    pub basis: String,
}

/// Checks the structural invariants of a generated graph; failures are generator bugs.
pub fn verify_family(spec: &FamilySpec, g: &Graph) -> Result<()> {
    let fail = |msg: String| Err(Error::Generator(format!("{:?}(k={}): {msg}", spec.kind, spec.k)));
    let k = spec.k;
    match spec.kind {
        FamilyKind::BridgeStar => {
            let r = 2 * k + 1;
            if g.n() != r * (2 * k + 3) + 1 {
                return fail(format!("expected {} vertices, got {}", r * (2 * k + 3) + 1, g.n()));
            }
            if g.regular_degree() != Some(r) {
                return fail(format!("not {r}-regular"));
            }
            if !g.is_connected() {
                return fail("not connected".into());
            }
            let center = g.n() - 1;
            let br = bridges(g);
            if !g.incident(center).iter().all(|&(_, e)| br.contains(e)) {
                return fail("a center edge is not a bridge".into());
            }
        }
        FamilyKind::QuadraticUnion | FamilyKind::ConnectedQuadratic => {
            let apex = spec.kind == FamilyKind::ConnectedQuadratic;
            let comps = g.connected_components();
            if apex {
                if comps.len() != 1 {
                    return fail(format!("{} components, expected 1", comps.len()));
                }
                if g.max_degree() != 2 * k + 2 || g.deg(g.n() - 1) != k {
                    return fail("apex degrees wrong".into());
                }
            } else {
                if comps.len() != k {
                    return fail(format!("{} components, expected {k}", comps.len()));
                }
                for (i, comp) in comps.iter().enumerate() {
                    let want = 2 * (i + 1) + 1;
                    if comp.iter().any(|&v| g.deg(v) != want) {
                        return fail(format!("component {i} is not {want}-regular"));
                    }
                }
                if 4 * quadratic_prediction(k) != {
                    let d = g.max_degree();
                    d * d + 4 * d - 5
                } {
                    return fail("quadratic identity fails".into());
                }
            }
        }
    }
    Ok(())
}

/// Builds, verifies and describes one family member.
pub fn generate(spec: &FamilySpec) -> Result<(Graph, Manifest)> {
    let g = spec.build();
    verify_family(spec, &g)?;
    let k = spec.k;
    let (predicted, greater, basis) = match spec.kind {
        FamilyKind::BridgeStar => (
            Some(2 * k + 2),
            None,
            "odd-regular graph with a vertex whose edges are all bridges: palette index r+1".to_string(),
        ),
        FamilyKind::QuadraticUnion => (
            Some(quadratic_prediction(k)),
            None,
            "components with pairwise distinct degrees: palette indices add up to k^2+3k".to_string(),
        ),
        FamilyKind::ConnectedQuadratic => (
            None,
            Some(quadratic_prediction(k)),
            "apex over the quadratic union: palette index exceeds k^2+3k".to_string(),
        ),
    };
    let manifest = Manifest {
        kind: spec.kind,
        k,
        n: g.n(),
        m: g.m(),
        max_degree: g.max_degree(),
        components: g.connected_components().len(),
        graph6: to_graph6(&g),
        predicted_palette_index: predicted,
        palette_index_greater_than: greater,
        basis,
    };
    Ok((g, manifest))
}
