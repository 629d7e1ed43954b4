//! Bridge detection with an iterative lowlink DFS.

use super::{EdgeSubset, Graph};

/// Edges whose removal increases the number of connected components.
pub fn bridges(g: &Graph) -> EdgeSubset {
    let n = g.n();
    let mut out = g.edge_subset();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    // (vertex, parent edge, next incidence position)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push((root, usize::MAX, 0));
        while let Some(top) = stack.last_mut() {
            let (v, parent_edge, pos) = *top;
            if let Some(&(w, e)) = g.incident(v).get(pos) {
                top.2 += 1;
                if e == parent_edge {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, e, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] > disc[p] {
                        out.insert(parent_edge);
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn by_removal(g: &Graph) -> Vec<usize> {
        let base = g.connected_components().len();
        (0..g.m()).filter(|&e| g.components_avoiding(Some(e)).len() > base).collect()
    }

    #[test]
    fn trees_are_all_bridges() {
        for g in [named::path(6), named::star(4)] {
            assert_eq!(bridges(&g).count(), g.m());
        }
    }

    #[test]
    fn cycles_have_none() {
        assert!(bridges(&named::cycle(5)).is_empty());
        assert!(bridges(&named::petersen()).is_empty());
    }

    #[test]
    fn matches_removal_oracle() {
        // two triangles joined by a path, plus a pendant vertex
        let g = Graph::from_edges(8, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4), (6, 7)]).unwrap();
        assert_eq!(bridges(&g).to_vec(), by_removal(&g));
        assert_eq!(bridges(&g).to_vec(), vec![3, 4, 8]);
    }
}
