//! Static edge orders for the exact searches.

use crate::graph::{EdgeId, Graph};

/// Repeatedly takes the edge whose endpoints already have the most ordered
/// edges, so vertices get fully colored early. Ties go to the smaller index.
pub(crate) fn completion_order(g: &Graph) -> Vec<EdgeId> {
    let m = g.m();
    let mut placed = vec![false; m];
    let mut touched = vec![0usize; g.n()];
    let mut order = Vec::with_capacity(m);
    for _ in 0..m {
        let (mut best, mut best_score) = (usize::MAX, 0);
        for e in (0..m).filter(|&e| !placed[e]) {
            let (u, v) = g.edge(e);
            let score = 1 + touched[u] + touched[v];
            if best == usize::MAX || score > best_score {
                best = e;
                best_score = score;
            }
        }
        placed[best] = true;
        let (u, v) = g.edge(best);
        touched[u] += 1;
        touched[v] += 1;
        order.push(best);
    }
    order
}

/// Descending endpoint degree sum, ties kept in [`completion_order`].
pub(crate) fn solver_order(g: &Graph) -> Vec<EdgeId> {
    let mut order = completion_order(g);
    order.sort_by_key(|&e| {
        let (u, v) = g.edge(e);
        std::cmp::Reverse(g.deg(u) + g.deg(v))
    });
    order
}
