//! Classifies every admissible tuple up to a bound and prints the tuples
//! that remain open.
//!
//! cargo run --release --example scan -- 400

use srgdb::registry::{Existence, Registry, ScanSummary};

fn main() -> srgdb::Result<()> {
    let max_n = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(200);
    let reg = Registry::with_defaults();
    let rows = reg.scan(max_n)?;
    for r in rows.iter().filter(|r| r.params.is_primitive() && r.existence == Existence::Unknown) {
        println!("open: {}", r.params);
    }
    let s = ScanSummary::of(&rows);
    println!("n <= {max_n}: {} exist, {} ruled out, {} open", s.exists, s.nonexistent, s.unknown);
    Ok(())
}
