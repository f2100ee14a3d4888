//! Finite fields, Steiner triple systems, orthogonal arrays and the Witt
//! design, each turned into a strongly regular graph and checked.

use srgdb::algebra::FiniteField;
use srgdb::designs::*;
use srgdb::graph::is_strongly_regular;

fn main() -> srgdb::Result<()> {
    let f = FiniteField::of_order(9)?;
    let g = f.primitive_element();
    let powers: Vec<String> = (0..8).map(|i| format!("{}", f.pow(g, i))).collect();
    println!("GF(9): powers of the primitive element {g}: {}", powers.join(" "));
    println!("GF(9): squares {:?}", f.squares());

    let sts = steiner_triple_system(15)?;
    println!("STS(15): {} blocks", sts.blocks().len());
    println!("  block graph {:?}", is_strongly_regular(&steiner_graph(&sts)?));

    for (k, n) in [(3, 5), (4, 7), (5, 8)] {
        let g = oa_block_graph(&orthogonal_array(k, n)?);
        println!("OA({k}, {n}) block graph {:?}", is_strongly_regular(&g));
    }

    let witt = witt_design_23()?;
    for avoid in [0, 1, 2] {
        let removed: Vec<usize> = (0..avoid).collect();
        let d = witt.blocks_avoiding(&removed)?;
        let g = block_intersection_graph(&d, &[3]);
        println!("Witt blocks avoiding {avoid} points: {:?}", is_strongly_regular(&g));
    }
    Ok(())
}
