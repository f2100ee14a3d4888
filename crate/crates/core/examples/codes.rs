//! Linear codes: Golay weight distributions, the hyperoval two-weight codes,
//! and the bundled database of two-weight codes.

use srgdb::codes::*;
use srgdb::graph::is_strongly_regular;

fn main() -> srgdb::Result<()> {
    let g23 = golay_binary_23()?;
    println!("binary Golay [23, 12]: weights {:?}", g23.weight_distribution()?);
    let g11 = golay_ternary_11()?;
    let dist = g11.weight_distribution()?;
    println!("ternary Golay [11, 6]: weights {dist:?}");
    println!("  dual via MacWilliams {:?}", macwilliams_transform(&dist, 3));

    for q in [4, 8] {
        let code = hyperoval_code(q)?;
        let w = TwoWeightWitness::of(&code)?;
        let g = two_weight_graph(&code, &w, q as usize + 2)?;
        println!("hyperoval code q = {q}: weights {} and {}, graph {:?}", w.w1, w.w2, is_strongly_regular(&g));
    }

    let db = bundled_code_database();
    for e in &db.entries {
        println!("{}: [{}, {}] over GF({}) gives {}", e.name, e.code.length(), e.code.dimension(), e.code.field().order(), e.params);
    }
    Ok(())
}
