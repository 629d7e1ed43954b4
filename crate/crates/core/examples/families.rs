//! Generating the extremal families and their manifests.
//!
//! Run with `cargo run --example families`.

use palette_lab::families::{generate, FamilyKind, FamilySpec};

fn main() -> palette_lab::Result<()> {
    for kind in [FamilyKind::BridgeStar, FamilyKind::QuadraticUnion, FamilyKind::ConnectedQuadratic] {
        for k in 1..=3 {
            let (g, manifest) = generate(&FamilySpec::new(kind, k)?)?;
            let claim = match (manifest.predicted_palette_index, manifest.palette_index_greater_than) {
                (Some(v), _) => format!("š = {v}"),
                (None, Some(b)) => format!("š > {b}"),
                _ => String::new(),
            };
            println!(
                "{kind:?}(k={k}): n={} m={} Δ={} components={} {claim}",
                g.n(),
                g.m(),
                manifest.max_degree,
                manifest.components
            );
        }
    }
    Ok(())
}
