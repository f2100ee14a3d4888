//! Small instances of every construction, with the parameters their
//! formulas predict. Shared by the acceptance and property suites.

#![allow(dead_code)]

use srgdb::algebra::{is_prime_power, FormKind};
use srgdb::designs::*;
use srgdb::hadamard::*;
use srgdb::{Graph, Result, SrgParams};

pub struct Instance {
    pub name: String,
    pub graph: Graph,
    pub expected: SrgParams,
}

fn push(out: &mut Vec<Instance>, name: String, graph: Result<Graph>, expected: Option<SrgParams>) {
    let graph = graph.unwrap_or_else(|e| panic!("{name}: {e}"));
    let expected = expected.unwrap_or_else(|| panic!("{name}: no formula parameters"));
    out.push(Instance { name, graph, expected });
}

fn kron_chain(t: u64, e: Epsilon) -> Rshcd {
    let mut m = rshcd_base4(e);
    while (m.order() as u64) < 4 * t * t {
        m = rshcd_kronecker(&m, &rshcd_base4(Epsilon::Plus)).unwrap();
    }
    m
}

/// The corpus over the small ranges: Paley `q ≤ 49`, Johnson `m ≤ 10`,
/// OA prime powers `n ≤ 9`, STS `v ∈ {9, 15, 21}`, polar and affine polar
/// dimensions up to 6 with `q ≤ 4`, AS `q ∈ {3, 5}`, T2* `q ∈ {2, 4}`, their
/// duals, and two-graph descendants.
pub fn corpus() -> Vec<Instance> {
    let mut out = Vec::new();
    for q in (5..=49).filter(|&q| q % 4 == 1 && is_prime_power(q)) {
        push(&mut out, format!("Paley({q})"), paley_graph(q), paley_params(q));
    }
    for m in 4..=10 {
        push(&mut out, format!("J({m}, 2)"), johnson_graph(m as usize, 2), johnson_params(m));
    }
    for n in (2..=9).filter(|&n| is_prime_power(n)) {
        for k in 2..=n {
            let g = orthogonal_array(k as usize, n as usize).map(|oa| oa_block_graph(&oa));
            push(&mut out, format!("OA({k}, {n})"), g, oa_block_graph_params(k, n));
        }
    }
    for v in [9u64, 15, 21] {
        let g = steiner_triple_system(v as usize).and_then(|d| steiner_graph(&d));
        push(&mut out, format!("STS({v})"), g, steiner_graph_params(v, 3));
    }
    for kind in [FormKind::Plus, FormKind::Minus, FormKind::Parabolic, FormKind::Symplectic] {
        for dim in 4..=6 {
            for q in [2, 3, 4] {
                if let Some(p) = polar_graph_params(kind, dim, q) {
                    push(&mut out, format!("polar {kind} {dim} {q}"), polar_graph(kind, dim, q), Some(p));
                }
            }
        }
    }
    for plus in [true, false] {
        for two_m in [4, 6] {
            for q in [2, 3, 4] {
                if let Some(p) = affine_polar_graph_params(plus, two_m, q) {
                    let name = format!("VO{}({two_m}, {q})", if plus { "+" } else { "-" });
                    push(&mut out, name, affine_polar_graph(plus, two_m, q), Some(p));
                }
            }
        }
    }
    for q in [3u64, 5] {
        let gq = gq_ahrens_szekeres(q).unwrap();
        push(&mut out, format!("AS({q})"), Ok(gq.point_graph()), gq_point_graph_params(q - 1, q + 1));
        push(&mut out, format!("AS({q})*"), gq.dual().map(|d| d.point_graph()), gq_point_graph_params(q + 1, q - 1));
    }
    for q in [2u64, 4] {
        let gq = gq_t2_star(q, &hyperoval(q).unwrap()).unwrap();
        push(&mut out, format!("T2*({q})"), Ok(gq.point_graph()), gq_point_graph_params(q - 1, q + 1));
        push(&mut out, format!("T2*({q})*"), gq.dual().map(|d| d.point_graph()), gq_point_graph_params(q + 1, q - 1));
    }
    for t in [2u64, 4] {
        let expected = SrgParams::new(4 * t * t - 1, 2 * t * t, t * t, t * t).ok();
        let g = rshcd_descendant(&kron_chain(t, Epsilon::Plus), 0);
        push(&mut out, format!("descendant of RSHCD+({})", 4 * t * t), g, expected);
    }
    for q in [5u64, 9, 13] {
        push(&mut out, format!("descendant of conference({})", q + 1), conference_descendant(q, 0), paley_params(q));
    }
    out
}
