//! Exact palette index by depth-first branch and bound.
//!
//! Edges are colored in a static order with colors introduced in first-use
//! order. A partial coloring is abandoned once the palettes it already forces
//! reach the incumbent. The forced count is the number of distinct palettes of
//! fully colored vertices plus one for every degree class that has no completed
//! vertex yet (palette size equals degree, so each class needs its own palette).

use std::fmt;

use serde::{Serialize, Serializer};

use super::kcolor::MAX_SEARCH_COLORS;
use super::order::solver_order;
use super::{palette_count, vizing_coloring, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Exactness {
    /// The value is the palette index with no restriction on the number of colors.
    Unconditional,
    /// Minimum over colorings using colors `1..=c_max` only.
    BoundedColors(usize),
}

impl fmt::Display for Exactness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exactness::Unconditional => f.write_str("exact-unconditional"),
            Exactness::BoundedColors(c) => write!(f, "exact-for-bounded-colors({c})"),
        }
    }
}

impl Serialize for Exactness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PaletteIndexResult {
    pub value: usize,
    pub witness: EdgeColoring,
    pub exactness: Exactness,
    /// Why the value is unconditional, when it is.
    pub exactness_reason: Option<String>,
    pub nodes: u64,
}

#[derive(Clone, Debug, Default)]
pub struct SolverOptions {
    /// Abort with [`Error::Undecided`] after this many search nodes.
    pub node_limit: Option<u64>,
    /// Node limit for the even-subgraph search used when grading exactness.
    pub certify_node_limit: Option<u64>,
}

pub fn palette_index_exact(g: &Graph, c_max: usize) -> Result<PaletteIndexResult> {
    palette_index_with(g, c_max, &SolverOptions::default())
}

pub fn palette_index_with(g: &Graph, c_max: usize, opts: &SolverOptions) -> Result<PaletteIndexResult> {
    let (value, colors, nodes) = search(g, c_max, opts.node_limit)?;
    let witness = EdgeColoring { c_max, colors };
    let (exactness, exactness_reason) = grade(g, c_max, value, opts)?;
    Ok(PaletteIndexResult { value, witness, exactness, exactness_reason, nodes })
}

fn grade(g: &Graph, c_max: usize, value: usize, opts: &SolverOptions) -> Result<(Exactness, Option<String>)> {
    let mut degs = g.degrees();
    degs.sort_unstable();
    degs.dedup();
    if value == degs.len() {
        return Ok((Exactness::Unconditional, Some("equals the number of distinct degrees".into())));
    }
    if g.regular_degree() == Some(3) && g.is_connected() && c_max >= 4 {
        let cubic = crate::certify::classify_cubic(g)?;
        if cubic.value != value {
            return Err(Error::Internal(format!(
                "cubic classification gives {} but bounded search gives {value}",
                cubic.value
            )));
        }
        return Ok((Exactness::Unconditional, Some("connected cubic graph, agrees with classify_cubic".into())));
    }
    let (delta_min, _) = g.min_max_degree()?;
    if value == delta_min + 1 && degs[0] > 0 {
        let even = crate::even::SearchOptions { node_limit: opts.certify_node_limit };
        if let Ok(Some(_)) = crate::certify::certify_lower_bound_with(g, &even) {
            return Ok((Exactness::Unconditional, Some("meets the certified lower bound δ+1".into())));
        }
    }
    Ok((Exactness::BoundedColors(c_max), None))
}

/// Returns `(value, witness colors, nodes explored)`.
pub(crate) fn search(g: &Graph, c_max: usize, node_limit: Option<u64>) -> Result<(usize, Vec<usize>, u64)> {
    if g.m() == 0 {
        return Err(Error::Input("graph has no edges".into()));
    }
    let delta = g.max_degree();
    if c_max < delta {
        return Err(Error::Input(format!("c_max = {c_max} is below the maximum degree {delta}")));
    }
    if c_max > MAX_SEARCH_COLORS {
        return Err(Error::Input(format!("exact search supports at most {MAX_SEARCH_COLORS} colors")));
    }

    let degrees = g.degrees();
    let mut classes: Vec<usize> = degrees.clone();
    classes.sort_unstable();
    classes.dedup();
    let class_of: Vec<usize> = degrees.iter().map(|d| classes.binary_search(d).unwrap()).collect();

    let mut s = Search {
        g,
        order: solver_order(g),
        c_max,
        degrees,
        class_of,
        used: vec![0; g.n()],
        remaining: (0..g.n()).map(|v| g.deg(v)).collect(),
        colors: vec![0; g.m()],
        introduced: 0,
        pals: Vec::new(),
        class_count: vec![0; classes.len()],
        uncovered: classes.len(),
        limit: usize::MAX,
        lower: classes.len(),
        regular: classes.len() == 1,
        best: None,
        nodes: 0,
        node_limit,
        aborted: false,
        done: false,
    };
    for v in 0..g.n() {
        if s.remaining[v] == 0 {
            s.complete(v);
        }
    }

    if c_max > delta {
        let viz = vizing_coloring(g);
        let t = palette_count(g, &viz)?;
        s.record(t, viz.colors);
    }
    if !s.done {
        s.dfs(0);
    }
    if s.aborted {
        return Err(Error::Undecided { nodes: s.nodes });
    }
    let nodes = s.nodes;
    match s.best {
        Some((value, colors)) => Ok((value, colors, nodes)),
        None => Err(Error::Contract(format!("no proper edge coloring with {c_max} colors exists"))),
    }
}

struct Search<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    c_max: usize,
    degrees: Vec<usize>,
    class_of: Vec<usize>,
    used: Vec<u128>,
    remaining: Vec<usize>,
    colors: Vec<usize>,
    introduced: usize,
    /// Distinct palettes of completed vertices with multiplicities.
    pals: Vec<(u128, usize)>,
    class_count: Vec<usize>,
    uncovered: usize,
    /// Largest palette count an improving solution may have.
    limit: usize,
    lower: usize,
    regular: bool,
    best: Option<(usize, Vec<usize>)>,
    nodes: u64,
    node_limit: Option<u64>,
    aborted: bool,
    done: bool,
}

impl Search<'_> {
    fn forced(&self) -> usize {
        self.pals.len() + self.uncovered
    }

    fn record(&mut self, value: usize, colors: Vec<usize>) {
        self.best = Some((value, colors));
        self.limit = value - 1;
        // no regular graph has palette index 2
        if self.regular && self.limit == 2 {
            self.limit = 1;
        }
        if self.limit < self.lower {
            self.done = true;
        }
    }

    /// Registers `v`'s palette; returns true when it is new.
    fn complete(&mut self, v: usize) -> bool {
        let p = self.used[v];
        if let Some(slot) = self.pals.iter_mut().find(|(q, _)| *q == p) {
            slot.1 += 1;
            return false;
        }
        self.pals.push((p, 1));
        let cls = self.class_of[v];
        self.class_count[cls] += 1;
        if self.class_count[cls] == 1 {
            self.uncovered -= 1;
        }
        true
    }

    fn uncomplete(&mut self, v: usize) {
        let p = self.used[v];
        let last = self.pals.len() - 1;
        let i = self.pals.iter().position(|(q, _)| *q == p).expect("palette registered");
        self.pals[i].1 -= 1;
        if self.pals[i].1 == 0 {
            debug_assert_eq!(i, last, "palettes are released in LIFO order");
            self.pals.pop();
            let cls = self.class_of[v];
            self.class_count[cls] -= 1;
            if self.class_count[cls] == 0 {
                self.uncovered += 1;
            }
        }
    }

    /// With no palette budget left, an incomplete vertex whose degree class is
    /// already represented must grow into one of the existing palettes.
    fn compatible(&self, v: usize) -> bool {
        if self.remaining[v] == 0 || self.class_count[self.class_of[v]] == 0 {
            return true;
        }
        let d = self.degrees[v] as u32;
        let have = self.used[v];
        self.pals.iter().any(|&(p, _)| p.count_ones() == d && have & !p == 0)
    }

    fn feasible(&self, u: usize, v: usize, grew: bool) -> bool {
        let forced = self.forced();
        if forced > self.limit {
            return false;
        }
        if forced < self.limit {
            return true;
        }
        if grew {
            (0..self.g.n()).all(|x| self.compatible(x))
        } else {
            self.compatible(u) && self.compatible(v)
        }
    }

    fn dfs(&mut self, idx: usize) {
        self.nodes += 1;
        if self.node_limit.is_some_and(|l| self.nodes > l) {
            self.aborted = true;
            return;
        }
        let Some(&e) = self.order.get(idx) else {
            let value = self.pals.len();
            self.record(value, self.colors.clone());
            return;
        };
        let (u, v) = self.g.edge(e);
        let cap = (self.introduced + 1).min(self.c_max);
        let allowed = if cap == 128 { !0 } else { (1u128 << cap) - 1 };
        let mut free = allowed & !(self.used[u] | self.used[v]);
        while free != 0 {
            let c = free.trailing_zeros() as usize;
            free &= free - 1;
            let bit = 1u128 << c;
            let prev_introduced = self.introduced;
            self.introduced = self.introduced.max(c + 1);
            self.colors[e] = c + 1;
            self.used[u] |= bit;
            self.used[v] |= bit;
            self.remaining[u] -= 1;
            self.remaining[v] -= 1;
            let mut grew = false;
            if self.remaining[u] == 0 {
                grew |= self.complete(u);
            }
            if self.remaining[v] == 0 {
                grew |= self.complete(v);
            }

            if self.feasible(u, v, grew) {
                self.dfs(idx + 1);
            }

            if self.remaining[v] == 0 {
                self.uncomplete(v);
            }
            if self.remaining[u] == 0 {
                self.uncomplete(u);
            }
            self.remaining[u] += 1;
            self.remaining[v] += 1;
            self.used[u] &= !bit;
            self.used[v] &= !bit;
            self.colors[e] = 0;
            self.introduced = prev_introduced;
            if self.done || self.aborted {
                return;
            }
        }
    }
}
