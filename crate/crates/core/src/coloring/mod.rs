//! Proper edge colorings, palettes, and exact palette-index search.

mod kcolor;
mod order;
mod solver;
mod vizing;

pub use kcolor::is_k_edge_colorable;
pub use solver::{palette_index_exact, palette_index_with, Exactness, PaletteIndexResult, SolverOptions};
pub use vizing::vizing_coloring;

use serde::{Deserialize, Serialize};

use crate::bits::BitVec;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Vertex};

pub type Color = usize;

/// A map from edge index to a color in `1..=c_max`.
///
/// The declared universe `c_max` matters even when some colors go unused.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColoring {
    pub c_max: usize,
    pub colors: Vec<Color>,
}

impl EdgeColoring {
    pub fn new(g: &Graph, c_max: usize, colors: Vec<Color>) -> Result<Self> {
        if colors.len() != g.m() {
            return Err(Error::Contract(format!(
                "coloring has {} entries but graph has {} edges",
                colors.len(),
                g.m()
            )));
        }
        if let Some((e, &c)) = colors.iter().enumerate().find(|&(_, &c)| c == 0 || c > c_max) {
            return Err(Error::Contract(format!("edge {e} has color {c} outside 1..={c_max}")));
        }
        Ok(EdgeColoring { c_max, colors })
    }

    #[inline]
    pub fn color(&self, e: EdgeId) -> Color {
        self.colors[e]
    }

    pub fn colors_used(&self) -> usize {
        let mut seen = vec![false; self.c_max + 1];
        self.colors.iter().for_each(|&c| seen[c] = true);
        seen.iter().filter(|&&s| s).count()
    }

    /// Colors at `v`, sorted.
    pub fn palette_of(&self, g: &Graph, v: Vertex) -> Vec<Color> {
        let mut p: Vec<Color> = g.incident(v).iter().map(|&(_, e)| self.colors[e]).collect();
        p.sort_unstable();
        p
    }

    /// Edges whose color lies in `set`.
    pub fn edges_with_colors(&self, set: &ColorSet) -> crate::graph::EdgeSubset {
        crate::graph::EdgeSubset::from_edges(
            self.colors.len(),
            self.colors.iter().enumerate().filter(|&(_, &c)| set.contains(c)).map(|(e, _)| e),
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("coloring serializes")
    }

    pub fn from_json(g: &Graph, text: &str) -> Result<Self> {
        let raw: EdgeColoring =
            serde_json::from_str(text).map_err(|e| Error::Parse { offset: e.column(), message: e.to_string() })?;
        EdgeColoring::new(g, raw.c_max, raw.colors)
    }
}

pub fn check_proper(g: &Graph, c: &EdgeColoring) -> bool {
    if c.colors.len() != g.m() {
        return false;
    }
    let mut seen = vec![usize::MAX; c.c_max + 1];
    (0..g.n()).all(|v| {
        g.incident(v).iter().all(|&(_, e)| {
            let col = c.colors[e];
            let fresh = seen[col] != v;
            seen[col] = v;
            fresh
        })
    })
}

/// A subset of the color universe `{1..=c_max}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ColorSet(BitVec);

impl ColorSet {
    pub fn empty(c_max: usize) -> Self {
        ColorSet(BitVec::zeros(c_max))
    }

    pub fn from_colors(c_max: usize, colors: impl IntoIterator<Item = Color>) -> Self {
        let mut s = ColorSet::empty(c_max);
        for c in colors {
            s.insert(c);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, c: Color) -> bool {
        c >= 1 && c <= self.0.len() && self.0.get(c - 1)
    }

    pub fn insert(&mut self, c: Color) {
        assert!(c >= 1 && c <= self.0.len(), "color {c} outside 1..={}", self.0.len());
        self.0.set(c - 1, true);
    }

    pub fn len(&self) -> usize {
        self.0.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_zero()
    }

    pub fn symmetric_difference(&self, other: &ColorSet) -> ColorSet {
        ColorSet(self.0.xor(&other.0))
    }

    pub fn intersection(&self, other: &ColorSet) -> ColorSet {
        ColorSet(self.0.and(&other.0))
    }

    pub fn iter(&self) -> impl Iterator<Item = Color> + '_ {
        self.0.iter_ones().map(|i| i + 1)
    }

    pub fn to_vec(&self) -> Vec<Color> {
        self.iter().collect()
    }
}

impl std::fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// The distinct palettes of a coloring and which one each vertex carries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PaletteTable {
    /// Sorted color lists, in lexicographic order.
    pub palettes: Vec<Vec<Color>>,
    pub vertex_palette: Vec<usize>,
    #[serde(skip)]
    sets: Vec<ColorSet>,
}

impl PaletteTable {
    /// Number of distinct palettes `t`.
    pub fn t(&self) -> usize {
        self.palettes.len()
    }

    pub fn set(&self, j: usize) -> &ColorSet {
        &self.sets[j]
    }

    pub fn sets(&self) -> &[ColorSet] {
        &self.sets
    }

    pub fn c_max(&self) -> usize {
        self.sets.first().map_or(0, ColorSet::universe)
    }
}

pub fn palettes(g: &Graph, c: &EdgeColoring) -> Result<PaletteTable> {
    if !check_proper(g, c) {
        return Err(Error::Contract("coloring is not proper".into()));
    }
    let per_vertex: Vec<Vec<Color>> = (0..g.n()).map(|v| c.palette_of(g, v)).collect();
    let mut palettes = per_vertex.clone();
    palettes.sort();
    palettes.dedup();
    let vertex_palette = per_vertex.iter().map(|p| palettes.binary_search(p).expect("palette present")).collect();
    let sets = palettes.iter().map(|p| ColorSet::from_colors(c.c_max, p.iter().copied())).collect();
    Ok(PaletteTable { palettes, vertex_palette, sets })
}

/// Number of distinct palettes of a proper coloring.
pub fn palette_count(g: &Graph, c: &EdgeColoring) -> Result<usize> {
    palettes(g, c).map(|t| t.t())
}
