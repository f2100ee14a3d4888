//! Generalized quadrangles and polar spaces: point graphs of AS(q), T2*(q)
//! and their duals, then the classical polar graphs over small fields.

use srgdb::algebra::FormKind;
use srgdb::designs::*;
use srgdb::graph::is_strongly_regular;

fn main() -> srgdb::Result<()> {
    for q in [3, 5] {
        let gq = gq_ahrens_szekeres(q)?;
        println!("AS({q}) order {:?}: {:?}", gq.order(), is_strongly_regular(&gq.point_graph()));
        println!("  dual: {:?}", is_strongly_regular(&gq.dual()?.point_graph()));
    }
    for q in [2, 4] {
        let gq = gq_t2_star(q, &hyperoval(q)?)?;
        println!("T2*({q}) order {:?}: {:?}", gq.order(), is_strongly_regular(&gq.point_graph()));
    }
    for (kind, dim, q) in [
        (FormKind::Plus, 6, 2),
        (FormKind::Minus, 6, 2),
        (FormKind::Parabolic, 5, 3),
        (FormKind::Symplectic, 4, 4),
    ] {
        let g = polar_graph(kind, dim, q)?;
        println!(
            "{kind} polar graph, dimension {dim} over GF({q}): {:?}, formula {:?}",
            is_strongly_regular(&g),
            polar_graph_params(kind, dim, q)
        );
    }
    let g = affine_polar_graph(false, 4, 3)?;
    println!("VO-(4, 3): {:?}", is_strongly_regular(&g));
    Ok(())
}
