//! Reading and writing graph6 and edge lists.
//!
//! Run with `cargo run --example graph_io`.

use palette_lab::graph::{named, parse_edge_list, parse_graph6, to_edge_list, to_graph6};

fn main() -> palette_lab::Result<()> {
    let k4 = parse_graph6("C~")?;
    println!("C~ -> n={} edges {:?}", k4.n(), k4.edges());

    let petersen = named::petersen();
    let g6 = to_graph6(&petersen);
    println!("Petersen graph6: {g6}");
    assert_eq!(parse_graph6(&g6)?.edges().len(), 15);

    let list = to_edge_list(&named::cycle(4));
    print!("C4 as an edge list:\n{list}");
    let back = parse_edge_list(&list)?;
    println!("round trip edges {:?}", back.edges());

    match parse_edge_list("0 1\n1 1\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!("self-loops are rejected"),
    }
    Ok(())
}
