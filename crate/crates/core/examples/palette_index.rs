//! Exact palette index of a few small graphs, with a witness coloring.
//!
//! Run with `cargo run --example palette_index`.

use palette_lab::coloring::{palette_index_exact, palettes};
use palette_lab::families::bridge_star;
use palette_lab::graph::named;

fn main() -> palette_lab::Result<()> {
    let graphs = [
        ("K4", named::complete(4)),
        ("C3", named::cycle(3)),
        ("C5", named::cycle(5)),
        ("K_{1,3}", named::star(3)),
        ("Petersen", named::petersen()),
        ("bridge_star(1)", bridge_star(1)),
    ];
    for (name, g) in graphs {
        let c_max = g.max_degree() + 1;
        let r = palette_index_exact(&g, c_max)?;
        let table = palettes(&g, &r.witness)?;
        println!("{name:<15} š = {}  ({}, {} search nodes)", r.value, r.exactness, r.nodes);
        println!("{:<15} palettes {:?}", "", table.palettes);
    }
    Ok(())
}
