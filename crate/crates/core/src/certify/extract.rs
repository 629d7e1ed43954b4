//! Constructive extraction of a spanning even subgraph from a coloring with
//! few palettes.
//!
//! Starting from `A = ∅`, while `G_A` has an isolated vertex `v` with palette
//! `P_j`, a set `R_j` of `δ + 1` colors is formed from `δ` colors of `P_j` and
//! one extra color `α`. With at most `δ` palettes, two distinct nonempty
//! subsets of `R_j` share a parity vector; their symmetric difference `I` has
//! zero parity and `A △ I` is strictly larger than `A` while still inducing an
//! even subgraph.

use serde::Serialize;

use super::{phi, ParityVector};
use crate::coloring::{palettes, Color, ColorSet, EdgeColoring};
use crate::error::{Error, Result};
use crate::even::EvenSubgraphWitness;
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AlphaRule {
    /// `|P_j| > δ`: `α` is a further color of `P_j`.
    FromPalette,
    /// `|P_j| = δ`: `α` is a color outside `P_j`.
    OutsidePalette,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtractionStep {
    pub vertex: Vertex,
    pub palette: usize,
    pub r_set: Vec<Color>,
    pub alpha: Color,
    pub rule: AlphaRule,
    pub first: Vec<Color>,
    pub second: Vec<Color>,
    pub parity: String,
    pub a_after: Vec<Color>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Extraction {
    pub witness: EvenSubgraphWitness,
    /// Final color set `A`; `G_A` is the witness. Empty when the special case applied.
    pub colors: Vec<Color>,
    /// `Some` when `|𝒞| = δ` and the answer was read off directly.
    pub special_case: Option<String>,
    pub steps: Vec<ExtractionStep>,
}

impl Extraction {
    pub fn iterations(&self) -> usize {
        self.steps.len()
    }
}

pub fn extract_spanning_even(g: &Graph, c: &EdgeColoring) -> Result<Extraction> {
    let table = palettes(g, c)?;
    let (delta_min, delta_max) = g.min_max_degree()?;
    if delta_min == 0 {
        return Err(Error::Input("graph has an isolated vertex".into()));
    }
    if delta_max < 2 {
        return Err(Error::Contract("maximum degree must be at least 2".into()));
    }
    if table.t() > delta_min {
        return Err(Error::Contract(format!("{} palettes exceed the minimum degree {delta_min}", table.t())));
    }

    let c_max = c.c_max;
    if c_max == delta_min {
        // every vertex sees all colors, so g is r-regular with r = δ
        let r = delta_min;
        let (edges, note) = if r % 2 == 0 {
            (crate::graph::EdgeSubset::all(g.m()), format!("{r}-regular with r colors, r even: all edges"))
        } else {
            let keep = ColorSet::from_colors(c_max, 1..c_max);
            (c.edges_with_colors(&keep), format!("{r}-regular with r colors, r odd: drop color class {c_max}"))
        };
        let witness = EvenSubgraphWitness { edges };
        if !witness.is_spanning_without_isolated(g) {
            return Err(Error::Internal(format!("special-case witness invalid ({note})")));
        }
        return Ok(Extraction { witness, colors: Vec::new(), special_case: Some(note), steps: Vec::new() });
    }

    let mut a = ColorSet::empty(c_max);
    let mut steps = Vec::new();
    loop {
        let ga = c.edges_with_colors(&a);
        let deg = g.subset_degrees(&ga);
        let Some(v) = deg.iter().position(|&d| d == 0) else {
            let witness = EvenSubgraphWitness { edges: ga };
            if !witness.is_spanning_without_isolated(g) {
                return Err(Error::Internal(format!("extracted set {:?} is not even; trace {steps:?}", a)));
            }
            return Ok(Extraction { witness, colors: a.to_vec(), special_case: None, steps });
        };
        if steps.len() >= c_max {
            return Err(Error::Internal(format!("more than |C| = {c_max} growth steps; trace {steps:?}")));
        }

        let j = table.vertex_palette[v];
        let pj = &table.palettes[j];
        let (mut r, alpha, rule) = if pj.len() > delta_min {
            (pj[..delta_min].to_vec(), pj[delta_min], AlphaRule::FromPalette)
        } else {
            // Prefer a color outside A (then I and A are disjoint), and among
            // those a used one; a used α in A still has nonzero parity, so I
            // cannot be {α} alone. Unused colors come last: they add no edges.
            let alpha = (1..=c_max)
                .filter(|col| !pj.contains(col))
                .min_by_key(|&col| (a.contains(col), !c.colors.contains(&col), col))
                .ok_or_else(|| Error::Internal(format!("palette {pj:?} covers the whole universe of size {c_max}")))?;
            (pj.clone(), alpha, AlphaRule::OutsidePalette)
        };
        r.push(alpha);
        r.sort_unstable();

        let (first, second, parity) = first_collision(c, &table, &r)?;
        let i_set = first.symmetric_difference(&second);
        let next = a.symmetric_difference(&i_set);
        if next.len() <= a.len() {
            return Err(Error::Internal(format!(
                "A did not grow at vertex {v}: {:?} -> {:?}; trace {steps:?}",
                a, next
            )));
        }
        if !phi(c, &table, &next)?.is_zero() {
            return Err(Error::Internal(format!("A △ I = {next:?} has nonzero parity")));
        }
        a = next;
        steps.push(ExtractionStep {
            vertex: v,
            palette: j,
            r_set: r,
            alpha,
            rule,
            first: first.to_vec(),
            second: second.to_vec(),
            parity: format!("{parity:?}"),
            a_after: a.to_vec(),
        });
    }
}

/// First pair of distinct nonempty subsets of `r` with equal parity, scanning
/// by size and then lexicographically.
fn first_collision(
    c: &EdgeColoring,
    table: &crate::coloring::PaletteTable,
    r: &[Color],
) -> Result<(ColorSet, ColorSet, ParityVector)> {
    let mut seen: std::collections::HashMap<ParityVector, ColorSet> = std::collections::HashMap::new();
    for size in 1..=r.len() {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let subset = ColorSet::from_colors(c.c_max, idx.iter().map(|&i| r[i]));
            let p = phi(c, table, &subset)?;
            if let Some(prev) = seen.get(&p) {
                return Ok((prev.clone(), subset, p));
            }
            seen.insert(p, subset);
            if !next_combination(&mut idx, r.len()) {
                break;
            }
        }
    }
    Err(Error::Internal(format!("no parity collision among subsets of {r:?} with {} palettes", table.t())))
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else { return false };
    idx[i] += 1;
    for j in i + 1..k {
        idx[j] = idx[j - 1] + 1;
    }
    true
}
