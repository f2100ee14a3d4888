//! Construction and verification of strongly regular graphs.
//!
//! Given parameters `(n, k, λ, μ)`, [`registry::Registry::lookup`] screens
//! them for feasibility, searches the registered constructions for one that
//! applies, builds the graph, and confirms it with the brute-force oracle in
//! [`graph::is_strongly_regular`] before returning it.

pub mod algebra;
pub mod cli;
pub mod codes;
pub mod designs;
pub mod error;
pub mod feasibility;
pub mod graph;
pub mod hadamard;
pub mod registry;

pub use error::{Error, Result};
pub use feasibility::SrgParams;
pub use graph::Graph;
