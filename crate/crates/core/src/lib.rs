//! Palette index of simple graphs.
//!
//! The palette of a vertex under a proper edge coloring is the set of colors on
//! its edges; the palette index is the fewest distinct palettes any proper
//! coloring achieves. This crate computes it exactly on small graphs, certifies
//! lower and upper bounds on larger ones, and generates odd-regular graphs whose
//! palette index is as large as possible.

pub mod bits;
pub mod certify;
pub mod coloring;
pub mod error;
pub mod even;
pub mod families;
pub mod graph;
pub mod report;

pub use error::{Error, Result};
pub use graph::{EdgeSubset, Graph};
