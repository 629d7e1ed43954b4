//! Recomputes the reference table and prints it as CSV.
//!
//! Run with `cargo run --release --example reproduce`.

use palette_lab::report::{reproduction_rows, rows_to_csv, Budget};

fn main() -> palette_lab::Result<()> {
    let rows = reproduction_rows(None, &Budget::default())?;
    print!("{}", rows_to_csv(&rows));
    let bad = rows.iter().filter(|r| !r.agreement).count();
    eprintln!("{} rows, {bad} disagreements", rows.len());
    Ok(())
}
