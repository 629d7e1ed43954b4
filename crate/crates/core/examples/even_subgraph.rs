//! Deciding whether a graph has a spanning even subgraph without isolated vertices.
//!
//! A YES answer carries a witness edge set; a NO answer carries either a
//! bridge-based certificate or an exhaustive-search digest.
//!
//! Run with `cargo run --example even_subgraph`.

use palette_lab::even::{cycle_space_basis, spanning_even_no_isolated, verify_no_certificate, EvenVerdict};
use palette_lab::families::bridge_star;
use palette_lab::graph::named;

fn main() {
    let graphs = [
        ("K4", named::complete(4)),
        ("Petersen", named::petersen()),
        ("K_{2,3}", named::complete_bipartite(2, 3)),
        ("path(5)", named::path(5)),
        ("bridge_star(1)", bridge_star(1)),
    ];
    for (name, g) in graphs {
        let dim = cycle_space_basis(&g).dimension();
        match spanning_even_no_isolated(&g) {
            EvenVerdict::Yes { witness } => {
                let edges: Vec<_> = witness.edges.iter().map(|e| g.edge(e)).collect();
                println!("{name:<15} dim {dim:>2}  YES  {edges:?}");
            }
            EvenVerdict::No { certificate } => {
                let ok = verify_no_certificate(&g, &certificate);
                println!("{name:<15} dim {dim:>2}  NO   {certificate:?} (verified: {ok})");
            }
            EvenVerdict::Undecided { nodes } => println!("{name:<15} undecided after {nodes} nodes"),
        }
    }
}
