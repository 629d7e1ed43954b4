//! Misra–Gries fan rotation: a proper coloring with at most `Δ + 1` colors.

use super::EdgeColoring;
use crate::graph::{EdgeId, Graph, Vertex};

const NONE: usize = usize::MAX;

struct State<'a> {
    g: &'a Graph,
    palette: usize,
    color: Vec<usize>,
    /// `at[v * (palette + 1) + c]` is the edge of color `c` at `v`, if any.
    at: Vec<usize>,
}

impl State<'_> {
    #[inline]
    fn slot(&self, v: Vertex, c: usize) -> usize {
        v * (self.palette + 1) + c
    }

    #[inline]
    fn is_free(&self, v: Vertex, c: usize) -> bool {
        self.at[self.slot(v, c)] == NONE
    }

    fn free_color(&self, v: Vertex) -> usize {
        (1..=self.palette).find(|&c| self.is_free(v, c)).expect("a vertex of degree <= Δ has a free color")
    }

    fn set(&mut self, e: EdgeId, c: usize) {
        let (u, v) = self.g.edge(e);
        let old = self.color[e];
        if old != 0 {
            let (su, sv) = (self.slot(u, old), self.slot(v, old));
            self.at[su] = NONE;
            self.at[sv] = NONE;
        }
        self.color[e] = c;
        if c != 0 {
            let (su, sv) = (self.slot(u, c), self.slot(v, c));
            debug_assert!(self.at[su] == NONE && self.at[sv] == NONE);
            self.at[su] = e;
            self.at[sv] = e;
        }
    }

    fn other(&self, e: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.g.edge(e);
        if a == v {
            b
        } else {
            a
        }
    }

    /// Maximal fan at `u` starting with edge `e0 = (u, v)`; entries are `(edge, far end)`.
    fn fan(&self, u: Vertex, e0: EdgeId, v: Vertex) -> Vec<(EdgeId, Vertex)> {
        let mut fan = vec![(e0, v)];
        let mut in_fan = vec![false; self.g.n()];
        in_fan[v] = true;
        loop {
            let last = fan.last().unwrap().1;
            let next = self
                .g
                .incident(u)
                .iter()
                .find(|&&(w, e)| !in_fan[w] && self.color[e] != 0 && self.is_free(last, self.color[e]));
            match next {
                Some(&(w, e)) => {
                    in_fan[w] = true;
                    fan.push((e, w));
                }
                None => return fan,
            }
        }
    }

    /// Swaps `c` and `d` along the alternating path leaving `u` on color `d`.
    fn invert_path(&mut self, u: Vertex, c: usize, d: usize) {
        let mut path = Vec::new();
        let (mut cur, mut want) = (u, d);
        loop {
            let e = self.at[self.slot(cur, want)];
            if e == NONE {
                break;
            }
            path.push(e);
            cur = self.other(e, cur);
            want = if want == c { d } else { c };
        }
        for &e in &path {
            self.set(e, 0);
        }
        // recolor after clearing so intermediate states never clash
        let mut want = d;
        for &e in &path {
            let flipped = if want == c { d } else { c };
            self.set(e, flipped);
            want = flipped;
        }
    }

    fn color_edge(&mut self, e: EdgeId) {
        let (u, v) = self.g.edge(e);
        let fan = self.fan(u, e, v);
        let c = self.free_color(u);
        let d = self.free_color(fan.last().unwrap().1);
        self.invert_path(u, c, d);

        let w = fan.iter().position(|&(_, x)| self.is_free(x, d)).expect("some fan vertex has d free");
        // rotate the fan prefix: each edge takes the color of its successor
        let shifted: Vec<usize> = (1..=w).map(|i| self.color[fan[i].0]).collect();
        for &(f, _) in &fan[..=w] {
            self.set(f, 0);
        }
        for (i, col) in shifted.into_iter().enumerate() {
            self.set(fan[i].0, col);
        }
        self.set(fan[w].0, d);
    }
}

/// Proper coloring with `c_max = Δ + 1`, deterministic in edge-index order.
pub fn vizing_coloring(g: &Graph) -> EdgeColoring {
    let palette = g.max_degree() + 1;
    let mut st = State { g, palette, color: vec![0; g.m()], at: vec![NONE; g.n() * (palette + 1)] };
    for e in 0..g.m() {
        st.color_edge(e);
    }
    EdgeColoring { c_max: palette, colors: st.color }
}
