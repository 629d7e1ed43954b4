//! Lower, upper and exact certificates, each re-checked by the independent verifier.
//!
//! Run with `cargo run --example certify`.

use palette_lab::certify::{
    certify_lower_bound, certify_upper_bound, palette_index_odd_regular_max, verify_certificate,
};
use palette_lab::families::bridge_star;
use palette_lab::graph::named;

fn main() -> palette_lab::Result<()> {
    let tree = palette_lab::Graph::from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)])?;
    for (name, g) in [("K4", named::complete(4)), ("tree", tree), ("bridge_star(2)", bridge_star(2))] {
        println!("{name}:");
        let mut certs = vec![certify_upper_bound(&g)?];
        certs.extend(certify_lower_bound(&g)?);
        if g.regular_degree().is_some_and(|r| r % 2 == 1 && r >= 3) {
            certs.extend(palette_index_odd_regular_max(&g)?);
        }
        for cert in certs {
            let ok = verify_certificate(&g, &cert);
            println!("  {:<24} {}  (verified: {ok})", cert.kind(), cert.claim());
        }
    }
    Ok(())
}
