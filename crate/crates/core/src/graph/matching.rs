//! Maximum cardinality matching in general graphs (Edmonds' blossom algorithm).

use std::collections::VecDeque;

use super::{EdgeSubset, Graph};

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS for an augmenting path from `root`; returns its free endpoint.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &(to, _) in self.g.incident(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }

    fn run(mut self) -> Vec<usize> {
        for v in 0..self.g.n() {
            if self.mate[v] == NONE {
                if let Some(&(w, _)) = self.g.incident(v).iter().find(|&&(w, _)| self.mate[w] == NONE) {
                    self.mate[v] = w;
                    self.mate[w] = v;
                }
            }
        }
        for v in 0..self.g.n() {
            if self.mate[v] == NONE {
                if let Some(end) = self.find_path(v) {
                    self.augment(end);
                }
            }
        }
        self.mate
    }
}

/// A maximum matching as an edge subset.
pub fn maximum_matching(g: &Graph) -> EdgeSubset {
    let mate = Blossom::new(g).run();
    let mut out = g.edge_subset();
    for (v, &w) in mate.iter().enumerate() {
        if w != NONE && v < w {
            out.insert(g.find_edge(v, w).expect("matched pair is an edge"));
        }
    }
    out
}

/// Decides whether `g` has a perfect matching; the witness is returned when it does.
pub fn has_perfect_matching(g: &Graph) -> (bool, Option<EdgeSubset>) {
    if g.n() % 2 == 1 {
        return (false, None);
    }
    let m = maximum_matching(g);
    if 2 * m.count() == g.n() {
        (true, Some(m))
    } else {
        (false, None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn valid_perfect(g: &Graph, s: &EdgeSubset) -> bool {
        g.subset_degrees(s).iter().all(|&d| d == 1)
    }

    /// Exhaustive: try matching the smallest uncovered vertex with each neighbour.
    fn brute(g: &Graph, covered: &mut Vec<bool>) -> bool {
        let Some(v) = covered.iter().position(|c| !c) else { return true };
        covered[v] = true;
        for &(w, _) in g.incident(v) {
            if !covered[w] {
                covered[w] = true;
                if brute(g, covered) {
                    covered[w] = false;
                    covered[v] = false;
                    return true;
                }
                covered[w] = false;
            }
        }
        covered[v] = false;
        false
    }

    #[test]
    fn k4_and_petersen() {
        for g in [named::complete(4), named::petersen()] {
            let (ok, w) = has_perfect_matching(&g);
            assert!(ok);
            assert!(valid_perfect(&g, &w.unwrap()));
            assert!(brute(&g, &mut vec![false; g.n()]));
        }
    }

    #[test]
    fn odd_order_never() {
        assert_eq!(has_perfect_matching(&named::cycle(5)), (false, None));
        assert_eq!(has_perfect_matching(&named::complete(7)), (false, None));
    }

    #[test]
    fn star_and_blossom_cases() {
        assert!(!has_perfect_matching(&named::star(3)).0);
        // two triangles joined by an edge: needs blossom handling from a bad greedy start
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap();
        let (ok, w) = has_perfect_matching(&g);
        assert!(ok && valid_perfect(&g, &w.unwrap()));
    }

    #[test]
    fn agrees_with_brute_force_on_small_graphs() {
        // all graphs on 6 vertices given by the low bits of a mask over the 15 pairs
        let pairs: Vec<_> = (0..6).flat_map(|u| (u + 1..6).map(move |v| (u, v))).collect();
        for mask in (0u32..1 << 15).step_by(7) {
            let g = Graph::from_edges(6, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p))
                .unwrap();
            let (ok, w) = has_perfect_matching(&g);
            assert_eq!(ok, brute(&g, &mut vec![false; 6]), "{g:?}");
            if let Some(w) = w {
                assert!(valid_perfect(&g, &w));
            }
        }
    }
}
