//! Looks up parameters in the construction registry, builds the graph, and
//! prints its graph6 encoding.
//!
//! cargo run --example lookup -- 253 140 87

use srgdb::graph::encode_graph6;
use srgdb::registry::{LookupStatus, Registry};

fn main() -> srgdb::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (n, k, lambda, mu) = match args[..] {
        [n, k, l] => (n, k, l, None),
        [n, k, l, m] => (n, k, l, Some(m)),
        _ => (175, 30, 5, None),
    };
    let reg = Registry::with_defaults();
    let res = reg.lookup(n, k, lambda, mu)?;
    match res.status {
        LookupStatus::Exists { graph, entry, provenance } => {
            eprintln!("{provenance} [{entry}, {:?}]", res.elapsed);
            println!("{}", String::from_utf8_lossy(&encode_graph6(&graph)));
        }
        LookupStatus::Infeasible(reason) => println!("{}: does not exist ({reason})", res.params),
        LookupStatus::Unknown => println!("{}: unknown", res.params),
    }
    Ok(())
}
