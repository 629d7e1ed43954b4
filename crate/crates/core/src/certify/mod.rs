//! Palette-index certificates: the parity map on color sets, the lower bound
//! `š > δ` for graphs without a spanning even subgraph free of isolated
//! vertices, the exact value `r + 1` for such odd-regular graphs, the cubic
//! classification, and additivity over components of distinct degrees.

mod extract;

pub use extract::{extract_spanning_even, AlphaRule, Extraction, ExtractionStep};

use serde::{Deserialize, Serialize};

use crate::bits::BitVec;
use crate::coloring::{
    check_proper, is_k_edge_colorable, palette_count, palettes, vizing_coloring, ColorSet, EdgeColoring, PaletteTable,
};
use crate::error::{Error, Result};
use crate::even::{spanning_even_with, verify_no_certificate, EvenVerdict, NoCertificate, SearchOptions};
use crate::graph::{has_perfect_matching, EdgeId, Graph};

/// `φ_c(A)`: bit `i` is the parity of `|P_i ∩ A|`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ParityVector(BitVec);

impl ParityVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn bits(&self) -> Vec<u8> {
        (0..self.0.len()).map(|i| self.0.get(i) as u8).collect()
    }

    pub fn add(&self, other: &ParityVector) -> ParityVector {
        ParityVector(self.0.xor(&other.0))
    }
}

impl std::fmt::Debug for ParityVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

pub fn phi(c: &EdgeColoring, pt: &PaletteTable, a: &ColorSet) -> Result<ParityVector> {
    if a.universe() != c.c_max || (pt.t() > 0 && pt.c_max() != c.c_max) {
        return Err(Error::Contract(format!(
            "color universe mismatch: coloring {}, set {}, palettes {}",
            c.c_max,
            a.universe(),
            pt.c_max()
        )));
    }
    let mut out = BitVec::zeros(pt.t());
    for (i, p) in pt.sets().iter().enumerate() {
        if p.intersection(a).len() % 2 == 1 {
            out.set(i, true);
        }
    }
    Ok(ParityVector(out))
}

/// Whether `G_A` is even, decided through the parity map alone.
pub fn phi_is_even_test(_g: &Graph, c: &EdgeColoring, pt: &PaletteTable, a: &ColorSet) -> Result<bool> {
    Ok(phi(c, pt, a)?.is_zero())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Certificate {
    /// `š > δ`, because no spanning even subgraph without isolated vertices exists.
    LowerBoundGtDelta { delta: usize, evidence: NoCertificate },
    /// `š = r + 1` for an odd `r`-regular graph.
    ExactOddRegularMax { r: usize, value: usize, lower: NoCertificate, upper: EdgeColoring },
    CubicClass {
        value: usize,
        three_edge_colorable: bool,
        has_perfect_matching: bool,
        coloring: Option<EdgeColoring>,
        matching: Option<Vec<EdgeId>>,
    },
    /// `š ≤ value`, from a proper coloring with at most `Δ + 1` colors.
    UpperBoundVizing { value: usize, coloring: EdgeColoring },
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::LowerBoundGtDelta { .. } => "LOWER_BOUND_GT_DELTA",
            Certificate::ExactOddRegularMax { .. } => "EXACT_ODD_REGULAR_MAX",
            Certificate::CubicClass { .. } => "CUBIC_CLASS",
            Certificate::UpperBoundVizing { .. } => "UPPER_BOUND_VIZING",
        }
    }

    /// Human-readable claim with a tag naming the fact it rests on.
    pub fn claim(&self) -> String {
        match self {
            Certificate::LowerBoundGtDelta { delta, .. } => {
                format!("palette index > {delta}  [no spanning even subgraph without isolated vertices => š > δ]")
            }
            Certificate::ExactOddRegularMax { r, value, .. } => {
                format!("palette index = {value}  [{r}-regular, r odd, no such even subgraph => š = r+1]")
            }
            Certificate::CubicClass { value, .. } => {
                format!("palette index = {value}  [cubic classification: 3-edge-colorable / 1-factor]")
            }
            Certificate::UpperBoundVizing { value, .. } => {
                format!("palette index <= {value}  [Vizing (Δ+1)-edge-coloring]")
            }
        }
    }
}

fn reject_isolated(g: &Graph) -> Result<(usize, usize)> {
    let (lo, hi) = g.min_max_degree()?;
    if lo == 0 {
        return Err(Error::Input("graph has an isolated vertex; its palette index is not defined here".into()));
    }
    Ok((lo, hi))
}

pub fn certify_lower_bound(g: &Graph) -> Result<Option<Certificate>> {
    certify_lower_bound_with(g, &SearchOptions::default())
}

pub fn certify_lower_bound_with(g: &Graph, opts: &SearchOptions) -> Result<Option<Certificate>> {
    let (delta, max) = reject_isolated(g)?;
    if max < 2 {
        return Ok(None);
    }
    match spanning_even_with(g, opts) {
        EvenVerdict::No { certificate } => Ok(Some(Certificate::LowerBoundGtDelta { delta, evidence: certificate })),
        EvenVerdict::Yes { .. } => Ok(None),
        EvenVerdict::Undecided { nodes } => Err(Error::Undecided { nodes }),
    }
}

pub fn certify_upper_bound(g: &Graph) -> Result<Certificate> {
    reject_isolated(g)?;
    let coloring = vizing_coloring(g);
    let value = palette_count(g, &coloring)?;
    Ok(Certificate::UpperBoundVizing { value, coloring })
}

pub fn palette_index_odd_regular_max(g: &Graph) -> Result<Option<Certificate>> {
    palette_index_odd_regular_max_with(g, &SearchOptions::default())
}

pub fn palette_index_odd_regular_max_with(g: &Graph, opts: &SearchOptions) -> Result<Option<Certificate>> {
    let r = match g.regular_degree() {
        Some(r) if r % 2 == 1 && r >= 3 => r,
        Some(r) => return Err(Error::Input(format!("graph is {r}-regular; an odd degree >= 3 is required"))),
        None => return Err(Error::Input("graph is not regular".into())),
    };
    let lower = match spanning_even_with(g, opts) {
        EvenVerdict::No { certificate } => certificate,
        EvenVerdict::Yes { .. } => return Ok(None),
        EvenVerdict::Undecided { nodes } => return Err(Error::Undecided { nodes }),
    };
    let upper = vizing_coloring(g);
    let t = palette_count(g, &upper)?;
    if t > r + 1 {
        return Err(Error::Internal(format!("{}-coloring of an {r}-regular graph has {t} palettes", upper.c_max)));
    }
    Ok(Some(Certificate::ExactOddRegularMax { r, value: r + 1, lower, upper }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicClassification {
    pub value: usize,
    pub certificate: Certificate,
}

pub fn classify_cubic(g: &Graph) -> Result<CubicClassification> {
    if g.regular_degree() != Some(3) {
        return Err(Error::Input("graph is not cubic".into()));
    }
    if !g.is_connected() {
        return Err(Error::Input("graph is not connected".into()));
    }
    let (colorable, coloring) = is_k_edge_colorable(g, 3)?;
    let (matchable, matching) = has_perfect_matching(g);
    let value = match (colorable, matchable) {
        (true, _) => 1,
        (false, true) => 3,
        (false, false) => 4,
    };
    Ok(CubicClassification {
        value,
        certificate: Certificate::CubicClass {
            value,
            three_edge_colorable: colorable,
            has_perfect_matching: matchable,
            coloring,
            matching: matching.map(|m| m.to_vec()),
        },
    })
}

/// Palette index of a disjoint union whose components have pairwise disjoint degree sets.
pub fn union_palette_index_distinct_degrees(components: &[(Graph, usize)]) -> Result<usize> {
    let sets: Vec<Vec<usize>> = components
        .iter()
        .map(|(g, _)| {
            let mut d = g.degrees();
            d.sort_unstable();
            d.dedup();
            d
        })
        .collect();
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if let Some(d) = sets[i].iter().find(|d| sets[j].contains(d)) {
                return Err(Error::Input(format!("components {i} and {j} share degree {d}")));
            }
        }
    }
    Ok(components.iter().map(|(_, v)| v).sum())
}

/// Re-checks a certificate against `g` without trusting how it was produced.
pub fn verify_certificate(g: &Graph, cert: &Certificate) -> bool {
    match cert {
        Certificate::LowerBoundGtDelta { delta, evidence } => {
            g.min_max_degree().is_ok_and(|(lo, hi)| lo == *delta && hi >= 2) && verify_no_certificate(g, evidence)
        }
        Certificate::ExactOddRegularMax { r, value, lower, upper } => {
            g.regular_degree() == Some(*r)
                && r % 2 == 1
                && *value == r + 1
                && verify_no_certificate(g, lower)
                && check_proper(g, upper)
                && palette_count(g, upper).is_ok_and(|t| t <= r + 1)
        }
        Certificate::CubicClass { value, three_edge_colorable, has_perfect_matching: pm, coloring, matching } => {
            let Ok(fresh) = classify_cubic(g) else { return false };
            let witness_ok = match (three_edge_colorable, coloring) {
                (true, Some(c)) => c.c_max == 3 && check_proper(g, c),
                (false, None) => true,
                _ => false,
            };
            let matching_ok = match (pm, matching) {
                (true, Some(m)) => {
                    let s = crate::graph::EdgeSubset::from_edges(g.m(), m.iter().copied());
                    m.iter().all(|&e| e < g.m()) && g.subset_degrees(&s).iter().all(|&d| d == 1)
                }
                (false, None) => true,
                _ => false,
            };
            fresh.value == *value && witness_ok && matching_ok
        }
        Certificate::UpperBoundVizing { value, coloring } => {
            check_proper(g, coloring)
                && coloring.c_max <= g.max_degree() + 1
                && palettes(g, coloring).is_ok_and(|t| t.t() == *value)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::bridge_star;
    use crate::graph::named;

    fn k4_matching() -> (Graph, EdgeColoring) {
        let g = named::complete(4);
        let color_of = |u: usize, v: usize| match (u, v) {
            (0, 1) | (2, 3) => 1,
            (0, 2) | (1, 3) => 2,
            _ => 3,
        };
        let colors = g.edges().iter().map(|&(u, v)| color_of(u, v)).collect();
        let c = EdgeColoring::new(&g, 3, colors).unwrap();
        (g, c)
    }

    #[test]
    fn phi_examples() {
        let (g, c) = k4_matching();
        let pt = palettes(&g, &c).unwrap();
        assert!(phi(&c, &pt, &ColorSet::empty(3)).unwrap().is_zero());
        assert_eq!(phi(&c, &pt, &ColorSet::from_colors(3, [1])).unwrap().bits(), vec![1]);

        let c4 = named::cycle(4);
        let c = EdgeColoring::new(&c4, 3, vec![1, 2, 1, 3]).unwrap();
        let pt = palettes(&c4, &c).unwrap();
        assert_eq!(phi(&c, &pt, &ColorSet::from_colors(3, [1, 2])).unwrap().bits(), vec![0, 1]);
        assert!(matches!(phi(&c, &pt, &ColorSet::empty(4)), Err(Error::Contract(_))));
    }

    #[test]
    fn phi_even_test_examples() {
        let c4 = named::cycle(4);
        let c = EdgeColoring::new(&c4, 2, vec![1, 2, 1, 2]).unwrap();
        let pt = palettes(&c4, &c).unwrap();
        let a = ColorSet::from_colors(2, [1, 2]);
        assert!(phi_is_even_test(&c4, &c, &pt, &a).unwrap());
        assert_eq!(c.edges_with_colors(&a).count(), 4);

        let c = EdgeColoring::new(&c4, 3, vec![1, 2, 1, 3]).unwrap();
        let pt = palettes(&c4, &c).unwrap();
        assert!(!phi_is_even_test(&c4, &c, &pt, &ColorSet::from_colors(3, [1])).unwrap());

        let (g, c) = k4_matching();
        let pt = palettes(&g, &c).unwrap();
        assert!(phi_is_even_test(&g, &c, &pt, &ColorSet::from_colors(3, [1, 2])).unwrap());
    }

    #[test]
    fn lower_bound_examples() {
        let cert = certify_lower_bound(&bridge_star(1)).unwrap().unwrap();
        assert!(matches!(cert, Certificate::LowerBoundGtDelta { delta: 3, .. }));
        assert!(verify_certificate(&bridge_star(1), &cert));
        assert!(certify_lower_bound(&named::complete(4)).unwrap().is_none());
        let star = named::star(3);
        let cert = certify_lower_bound(&star).unwrap().unwrap();
        assert!(matches!(cert, Certificate::LowerBoundGtDelta { delta: 1, .. }));
        assert!(certify_lower_bound(&Graph::empty(2)).is_err());
        // Δ = 1: silent
        assert!(certify_lower_bound(&named::path(2)).unwrap().is_none());
    }

    #[test]
    fn odd_regular_max_examples() {
        for (k, want) in [(1, 4), (2, 6)] {
            let g = bridge_star(k);
            let cert = palette_index_odd_regular_max(&g).unwrap().unwrap();
            assert!(matches!(cert, Certificate::ExactOddRegularMax { value, .. } if value == want));
            assert!(verify_certificate(&g, &cert));
        }
        assert!(palette_index_odd_regular_max(&named::petersen()).unwrap().is_none());
        assert!(palette_index_odd_regular_max(&named::cycle(5)).is_err());
        assert!(palette_index_odd_regular_max(&named::star(3)).is_err());
    }

    #[test]
    fn cubic_examples() {
        assert_eq!(classify_cubic(&named::complete(4)).unwrap().value, 1);
        assert_eq!(classify_cubic(&named::petersen()).unwrap().value, 3);
        let bs = classify_cubic(&bridge_star(1)).unwrap();
        assert_eq!(bs.value, 4);
        assert!(verify_certificate(&bridge_star(1), &bs.certificate));
        assert!(classify_cubic(&named::cycle(5)).is_err());
        assert!(classify_cubic(&named::complete(4).disjoint_union(&named::complete(4))).is_err());
    }

    #[test]
    fn union_examples() {
        let g1 = bridge_star(1);
        let g2 = bridge_star(2);
        assert_eq!(union_palette_index_distinct_degrees(&[(g1.clone(), 4), (g2, 6)]).unwrap(), 10);
        assert_eq!(union_palette_index_distinct_degrees(&[(g1, 4)]).unwrap(), 4);
        let err = union_palette_index_distinct_degrees(&[(named::cycle(3), 3), (named::cycle(4), 1)]);
        assert!(matches!(err, Err(Error::Input(_))));
    }

    #[test]
    fn upper_bound_certificate() {
        let g = named::complete(4);
        let cert = certify_upper_bound(&g).unwrap();
        let Certificate::UpperBoundVizing { value, .. } = &cert else { panic!() };
        assert!(*value <= 4);
        assert!(verify_certificate(&g, &cert));
    }

    #[test]
    fn certificate_json_round_trip() {
        let g = bridge_star(1);
        let cert = palette_index_odd_regular_max(&g).unwrap().unwrap();
        let j = serde_json::to_string(&cert).unwrap();
        assert!(j.contains("\"kind\":\"EXACT_ODD_REGULAR_MAX\""));
        let back: Certificate = serde_json::from_str(&j).unwrap();
        assert!(verify_certificate(&g, &back));
    }
}
