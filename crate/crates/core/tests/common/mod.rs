//! Corpora and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use palette_lab::coloring::{check_proper, palettes, EdgeColoring};
use palette_lab::even::cycle_space_basis;
use palette_lab::families::bridge_star;
use palette_lab::graph::{named, Graph};
use petgraph::graph::UnGraph;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Whether some element of the cycle space has every degree >= 2, by enumeration.
pub fn brute_spanning_even(g: &Graph) -> bool {
    let b = cycle_space_basis(g);
    assert!(b.dimension() <= 24, "brute force limited to small dimension");
    (0..1u64 << b.dimension()).any(|mask| g.subset_degrees(&b.combination(g.m(), mask)).iter().all(|&d| d >= 2))
}

/// Minimum palette count over all proper colorings in `1..=c_max`, by enumeration.
pub fn brute_palette_index(g: &Graph, c_max: usize) -> Option<usize> {
    let m = g.m() as u32;
    let mut best: Option<usize> = None;
    for mut code in 0..(c_max as u64).pow(m) {
        let colors = (0..m)
            .map(|_| {
                let c = (code % c_max as u64) as usize + 1;
                code /= c_max as u64;
                c
            })
            .collect();
        let c = EdgeColoring { c_max, colors };
        if check_proper(g, &c) {
            let t = palettes(g, &c).unwrap().t();
            best = Some(best.map_or(t, |b| b.min(t)));
        }
    }
    best
}

/// Fixed 50-graph corpus, every member with cycle-space dimension at most 20.
pub fn even_space_corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = vec![
        ("path(2)".into(), named::path(2)),
        ("path(6)".into(), named::path(6)),
        ("star(4)".into(), named::star(4)),
        ("spider".into(), Graph::from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap()),
        ("caterpillar".into(), Graph::from_edges(8, [(0, 1), (1, 2), (2, 3), (1, 4), (2, 5), (2, 6), (3, 7)]).unwrap()),
        ("C3".into(), named::cycle(3)),
        ("C4".into(), named::cycle(4)),
        ("C5".into(), named::cycle(5)),
        ("C8".into(), named::cycle(8)),
        ("C11".into(), named::cycle(11)),
        ("K4".into(), named::complete(4)),
        ("K5".into(), named::complete(5)),
        ("K6".into(), named::complete(6)),
        ("Petersen".into(), named::petersen()),
        ("bridge_star(1)".into(), bridge_star(1)),
        ("K2,3".into(), named::complete_bipartite(2, 3)),
        ("K2,5".into(), named::complete_bipartite(2, 5)),
        ("K3,3".into(), named::complete_bipartite(3, 3)),
        ("K3,4".into(), named::complete_bipartite(3, 4)),
        ("bowtie".into(), Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap()),
        ("dumbbell".into(), Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap()),
        ("theta".into(), Graph::from_edges(6, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 5), (5, 1)]).unwrap()),
        ("K4+C5".into(), named::complete(4).disjoint_union(&named::cycle(5))),
        ("circulant(10;1,3)".into(), named::circulant(10, &[1, 3])),
        ("prism".into(), named::circulant(6, &[1, 3])),
    ];
    let mut r = rng(0x5eed_e7e7);
    let mut i = 0;
    while out.len() < 50 {
        let n = r.gen_range(5..=12);
        let p = r.gen_range(0.15..0.6);
        let g = random_graph(&mut r, n, p);
        let dim = g.m() + g.connected_components().len() - g.n();
        if dim <= 20 && g.m() > 0 {
            out.push((format!("random#{i}(n={n},m={})", g.m()), g));
        }
        i += 1;
    }
    out
}

fn invariant(g: &Graph) -> Vec<usize> {
    // sorted per-vertex triangle counts, then sorted distance-2 neighbourhood sizes
    let n = g.n();
    let adj: Vec<Vec<bool>> = (0..n)
        .map(|v| {
            let mut row = vec![false; n];
            for &(w, _) in g.incident(v) {
                row[w] = true;
            }
            row
        })
        .collect();
    let mut tri: Vec<usize> = (0..n)
        .map(|v| {
            let nb: Vec<usize> = g.incident(v).iter().map(|&(w, _)| w).collect();
            let mut t = 0;
            for i in 0..nb.len() {
                for j in i + 1..nb.len() {
                    t += adj[nb[i]][nb[j]] as usize;
                }
            }
            t
        })
        .collect();
    tri.sort_unstable();
    let mut d2: Vec<usize> = (0..n)
        .map(|v| {
            let mut seen = vec![false; n];
            for &(w, _) in g.incident(v) {
                for &(x, _) in g.incident(w) {
                    seen[x] = true;
                }
            }
            seen.iter().filter(|&&s| s).count()
        })
        .collect();
    d2.sort_unstable();
    tri.extend(d2);
    tri
}

fn to_petgraph(g: &Graph) -> UnGraph<(), ()> {
    UnGraph::from_edges(g.edges().iter().map(|&(u, v)| (u as u32, v as u32)))
}

/// Connected cubic graphs on `n` vertices up to isomorphism.
///
/// Graphs are grown in breadth-first labelling order (every connected graph has
/// one), then deduplicated with an invariant bucket and an isomorphism check.
pub fn connected_cubic_graphs(n: usize) -> Vec<Graph> {
    fn grow(n: usize, adj: &mut Vec<Vec<usize>>, next: usize, v: usize, out: &mut Vec<Vec<(usize, usize)>>) {
        if v == n {
            if next == n && adj.iter().all(|a| a.len() == 3) {
                let mut e = Vec::new();
                for (u, a) in adj.iter().enumerate() {
                    e.extend(a.iter().filter(|&&w| u < w).map(|&w| (u, w)));
                }
                out.push(e);
            }
            return;
        }
        if v >= next {
            return; // BFS ran dry: disconnected
        }
        let need = 3 - adj[v].len();
        let cands: Vec<usize> = (v + 1..next).filter(|&w| adj[w].len() < 3 && !adj[v].contains(&w)).collect();
        for mask in 0u32..1 << cands.len() {
            let chosen: Vec<usize> = (0..cands.len()).filter(|i| mask >> i & 1 == 1).map(|i| cands[i]).collect();
            if chosen.len() > need {
                continue;
            }
            let fresh = need - chosen.len();
            if next + fresh > n {
                continue;
            }
            let mut new_nb = chosen.clone();
            new_nb.extend(next..next + fresh);
            for &w in &new_nb {
                adj[v].push(w);
                adj[w].push(v);
            }
            grow(n, adj, next + fresh, v + 1, out);
            for &w in &new_nb {
                adj[v].pop();
                let p = adj[w].iter().rposition(|&x| x == v).unwrap();
                adj[w].remove(p);
            }
        }
    }
    let mut raw = Vec::new();
    if n >= 4 && n.is_multiple_of(2) {
        let mut adj = vec![Vec::new(); n];
        grow(n, &mut adj, 1, 0, &mut raw);
    }
    let mut reps: Vec<(Vec<usize>, Graph, UnGraph<(), ()>)> = Vec::new();
    for edges in raw {
        let g = Graph::from_edges(n, edges).unwrap();
        let inv = invariant(&g);
        let pg = to_petgraph(&g);
        if reps.iter().any(|(i, _, p)| *i == inv && petgraph::algo::is_isomorphic(p, &pg)) {
            continue;
        }
        reps.push((inv, g, pg));
    }
    reps.into_iter().map(|(_, g, _)| g).collect()
}

/// A random proper coloring with colors in `1..=c_max`, or `None` if greedy gets stuck.
pub fn random_proper_coloring(rng: &mut ChaCha8Rng, g: &Graph, c_max: usize) -> Option<EdgeColoring> {
    let mut order: Vec<usize> = (0..g.m()).collect();
    order.shuffle(rng);
    let mut colors = vec![0usize; g.m()];
    for e in order {
        let (u, v) = g.edge(e);
        let busy: Vec<usize> =
            g.incident(u).iter().chain(g.incident(v)).map(|&(_, f)| colors[f]).filter(|&c| c > 0).collect();
        let free: Vec<usize> = (1..=c_max).filter(|c| !busy.contains(c)).collect();
        colors[e] = *free.choose(rng)?;
    }
    Some(EdgeColoring { c_max, colors })
}

/// Even-regular circulant on `n` (even) vertices with odd jumps; jump `s_i`
/// alternates colors `2i+1` and `2i+2`, giving one palette.
pub fn circulant_equitable(n: usize, jumps: &[usize]) -> (Graph, Vec<usize>) {
    let g = named::circulant(n, jumps);
    let colors = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let s = if (v - u) * 2 <= n { v - u } else { n - (v - u) };
            let i = jumps.iter().position(|&j| j == s).unwrap();
            // the edge leaves its "tail" vertex t with t + s = head (mod n)
            let tail = if (u + s) % n == v { u } else { v };
            2 * i + 1 + tail % 2
        })
        .collect();
    (g, colors)
}

/// Union of `r` edge-disjoint random perfect matchings, matching `i` colored `i+1`.
pub fn random_class_one_regular(rng: &mut ChaCha8Rng, n: usize, r: usize) -> Option<(Graph, Vec<usize>)> {
    let mut edges = Vec::new();
    let mut colors = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for color in 1..=r {
        let mut ok = false;
        for _ in 0..200 {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(rng);
            let pairs: Vec<(usize, usize)> = perm.chunks(2).map(|c| (c[0].min(c[1]), c[0].max(c[1]))).collect();
            if pairs.iter().all(|p| !seen.contains(p)) {
                for p in pairs {
                    seen.insert(p);
                    edges.push(p);
                    colors.push(color);
                }
                ok = true;
                break;
            }
        }
        if !ok {
            return None;
        }
    }
    Some((Graph::from_edges(n, edges).unwrap(), colors))
}

/// Recolors the `x`-edges of one `{x, y}` Kempe component with a color unused
/// at every vertex of that component. Keeps the coloring proper.
pub fn fresh_color_on_kempe_component(rng: &mut ChaCha8Rng, g: &Graph, colors: &mut [usize], c_max: usize) {
    let used: Vec<usize> = {
        let mut u: Vec<usize> = colors.to_vec();
        u.sort_unstable();
        u.dedup();
        u
    };
    if used.len() < 2 {
        return;
    }
    let x = *used.choose(rng).unwrap();
    let y = **used.iter().filter(|&&c| c != x).collect::<Vec<_>>().choose(rng).unwrap();
    let starts: Vec<usize> = (0..g.m()).filter(|&e| colors[e] == x).collect();
    let Some(&start) = starts.choose(rng) else { return };
    // collect the component of the {x,y} subgraph containing `start`
    let mut comp_edges = vec![start];
    let mut verts = vec![g.edge(start).0, g.edge(start).1];
    let mut i = 0;
    while i < verts.len() {
        let v = verts[i];
        for &(w, f) in g.incident(v) {
            if (colors[f] == x || colors[f] == y) && !comp_edges.contains(&f) {
                comp_edges.push(f);
                if !verts.contains(&w) {
                    verts.push(w);
                }
            }
        }
        i += 1;
    }
    let fresh: Vec<usize> =
        (1..=c_max).filter(|&z| verts.iter().all(|&v| g.incident(v).iter().all(|&(_, f)| colors[f] != z))).collect();
    let Some(&z) = fresh.choose(rng) else { return };
    for &f in &comp_edges {
        if colors[f] == x {
            colors[f] = z;
        }
    }
}
