//! Turning a coloring with few palettes into a spanning even subgraph.
//!
//! When a proper coloring has at most δ distinct palettes, the parity map into
//! Z₂^t forces a collision among subsets of δ+1 colors; each collision grows a
//! color set whose edges form an even subgraph, until no vertex is isolated.
//!
//! Run with `cargo run --example extract_even`.

use palette_lab::certify::{extract_spanning_even, phi};
use palette_lab::coloring::{palettes, ColorSet, EdgeColoring};
use palette_lab::graph::named;

fn main() -> palette_lab::Result<()> {
    let g = named::cycle(4);
    let c = EdgeColoring::new(&g, 3, vec![1, 2, 1, 3])?;
    let table = palettes(&g, &c)?;
    println!("C4 colored {:?}, palettes {:?}", c.colors, table.palettes);
    for colors in [vec![1], vec![2], vec![3], vec![1, 2], vec![2, 3]] {
        let p = phi(&c, &table, &ColorSet::from_colors(3, colors.iter().copied()))?;
        println!("  φ({colors:?}) = {:?}", p.bits());
    }

    let x = extract_spanning_even(&g, &c)?;
    for (i, s) in x.steps.iter().enumerate() {
        println!(
            "  step {}: vertex {} palette {} R = {:?} α = {} ({:?}); {:?} ~ {:?} -> A = {:?}",
            i + 1,
            s.vertex,
            s.palette,
            s.r_set,
            s.alpha,
            s.rule,
            s.first,
            s.second,
            s.a_after
        );
    }
    let edges: Vec<_> = x.witness.edges.iter().map(|e| g.edge(e)).collect();
    println!("witness edges {edges:?}, valid: {}", x.witness.is_spanning_without_isolated(&g));
    Ok(())
}
