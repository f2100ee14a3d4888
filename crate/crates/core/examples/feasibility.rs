//! Runs the feasibility conditions on a handful of parameter tuples and
//! prints the eigenvalues with their multiplicities.
//!
//! cargo run --example feasibility -- 99 14 1 2

use srgdb::feasibility::{check_feasibility, spectrum, FeasibilityVerdict};
use srgdb::SrgParams;

fn report(p: SrgParams) {
    match spectrum(&p) {
        Some(s) => println!("{p}: eigenvalues {} (x{}), {} (x{})", s.r, s.f, s.s, s.g),
        None => println!("{p}: no spectrum"),
    }
    match check_feasibility(&p) {
        FeasibilityVerdict::Infeasible(reason) => println!("  ruled out by {reason}"),
        FeasibilityVerdict::Unsettled => println!("  passes every condition"),
    }
}

fn main() {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    if let [n, k, lambda, mu] = args[..] {
        report(SrgParams { n, k, lambda, mu });
        return;
    }
    for (n, k, lambda, mu) in [
        (10, 3, 0, 1),
        (10, 3, 1, 1),
        (13, 6, 2, 3),
        (21, 10, 4, 5),
        (28, 9, 0, 4),
        (57, 14, 1, 4),
        (99, 14, 1, 2),
        (3250, 57, 0, 1),
    ] {
        report(SrgParams { n, k, lambda, mu });
    }
}
