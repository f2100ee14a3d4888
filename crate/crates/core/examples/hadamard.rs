//! Hadamard matrices and regular symmetric Hadamard matrices with constant
//! diagonal: Kronecker products, the sign flip, and the graphs they define.

use srgdb::graph::is_strongly_regular;
use srgdb::hadamard::*;

fn main() -> srgdb::Result<()> {
    let h = hadamard_paley_i(11)?;
    println!("Paley I, order {}: Hadamard {}", h.order(), h.is_hadamard());
    let h = hadamard_paley_ii(5)?;
    println!("Paley II, order {}: Hadamard {}", h.order(), h.is_hadamard());

    let plus = rshcd_base4(Epsilon::Plus);
    println!("order 4, plus:\n{}", plus.matrix().to_text());

    let m = rshcd_kronecker(&plus, &plus)?;
    println!("order 16 witness {:?}", m.witness());
    println!("  graph {:?}", is_strongly_regular(&rshcd_to_graph(&m)?));

    if let Some(split) = find_flip_split(&m)? {
        let f = rshcd_flip(&m, &split)?;
        println!("flip on {split:?}: witness {:?}", f.witness());
        println!("  graph {:?}", is_strongly_regular(&rshcd_to_graph(&f)?));
    }

    println!("descendant: {:?}", is_strongly_regular(&rshcd_descendant(&m, 0)?));
    println!("conference 13 descendant: {:?}", is_strongly_regular(&conference_descendant(13, 0)?));
    Ok(())
}
