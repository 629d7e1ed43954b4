//! Palette index of connected cubic graphs: 1, 3 or 4, decided by
//! 3-edge-colorability and the existence of a perfect matching.
//!
//! Run with `cargo run --example cubic_classify`.

use palette_lab::certify::classify_cubic;
use palette_lab::coloring::palette_index_exact;
use palette_lab::families::bridge_star;
use palette_lab::graph::named;

fn main() -> palette_lab::Result<()> {
    let graphs = [
        ("K4", named::complete(4)),
        ("K_{3,3}", named::complete_bipartite(3, 3)),
        ("prism", named::circulant(6, &[1, 3])),
        ("Petersen", named::petersen()),
        ("bridge_star(1)", bridge_star(1)),
    ];
    for (name, g) in graphs {
        let class = classify_cubic(&g)?;
        let exact = palette_index_exact(&g, 4)?;
        println!("{name:<15} classified {}  exact search {}  {}", class.value, exact.value, class.certificate.claim());
    }
    Ok(())
}
