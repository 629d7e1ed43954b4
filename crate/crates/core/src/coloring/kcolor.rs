//! Exact k-edge-colorability by backtracking with forward checking.

use super::{order::completion_order, vizing_coloring, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub(crate) const MAX_SEARCH_COLORS: usize = 128;

/// Decides whether `g` has a proper coloring with colors `1..=k`; a witness is
/// returned on success.
pub fn is_k_edge_colorable(g: &Graph, k: usize) -> Result<(bool, Option<EdgeColoring>)> {
    if k == 0 {
        return Err(Error::Input("k must be at least 1".into()));
    }
    let delta = g.max_degree();
    if k < delta {
        return Ok((false, None));
    }
    if k > delta {
        let mut c = vizing_coloring(g);
        c.c_max = k;
        return Ok((true, Some(c)));
    }
    if k > MAX_SEARCH_COLORS {
        return Err(Error::Input(format!("exact search supports at most {MAX_SEARCH_COLORS} colors")));
    }

    let mut s = KSearch {
        g,
        k,
        order: completion_order(g),
        used: vec![0; g.n()],
        colors: vec![0; g.m()],
        colored: vec![false; g.m()],
    };
    if s.dfs(0, 0) {
        Ok((true, Some(EdgeColoring { c_max: k, colors: s.colors })))
    } else {
        Ok((false, None))
    }
}

struct KSearch<'a> {
    g: &'a Graph,
    k: usize,
    order: Vec<usize>,
    used: Vec<u128>,
    colors: Vec<usize>,
    colored: Vec<bool>,
}

impl KSearch<'_> {
    fn all(&self) -> u128 {
        if self.k == 128 {
            !0
        } else {
            (1u128 << self.k) - 1
        }
    }

    /// Every uncolored edge at `x` still has a free color.
    fn viable(&self, x: usize) -> bool {
        let all = self.all();
        self.g.incident(x).iter().all(|&(y, f)| self.colored[f] || all & !(self.used[x] | self.used[y]) != 0)
    }

    fn dfs(&mut self, idx: usize, introduced: usize) -> bool {
        let Some(&e) = self.order.get(idx) else { return true };
        let (u, v) = self.g.edge(e);
        let cap = (introduced + 1).min(self.k);
        let allowed = if cap == 128 { !0 } else { (1u128 << cap) - 1 };
        let mut free = allowed & !(self.used[u] | self.used[v]);
        while free != 0 {
            let c = free.trailing_zeros() as usize;
            free &= free - 1;
            let bit = 1u128 << c;
            self.used[u] |= bit;
            self.used[v] |= bit;
            self.colors[e] = c + 1;
            self.colored[e] = true;
            if self.viable(u) && self.viable(v) && self.dfs(idx + 1, introduced.max(c + 1)) {
                return true;
            }
            self.used[u] &= !bit;
            self.used[v] &= !bit;
            self.colors[e] = 0;
            self.colored[e] = false;
        }
        false
    }
}
