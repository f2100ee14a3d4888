//! The default constructions and their matchers.
//!
//! Parametric families precompute a parameter-to-arguments map over the
//! envelope `n ≤ ENVELOPE`, so matching is a hash lookup.

use std::collections::HashMap;
use std::sync::Arc;

use super::{ConstructionEntry, Recipe, Tier};
use crate::algebra::{exact_sqrt, is_prime_power, FormKind};
use crate::codes::{
    code_distance_graph, codeword_support_graph_1288, golay_ternary_11, hyperoval_code,
    hyperoval_code_params, two_weight_graph, CodeDatabase, TwoWeightWitness,
};
use crate::designs::{
    affine_polar_graph, affine_polar_graph_params, block_intersection_graph, gq_ahrens_szekeres,
    gq_point_graph_params, gq_t2_star, hyperoval, johnson_graph, johnson_params, mathon_rosa_graph,
    oa_block_graph, oa_block_graph_params, orthogonal_array, paley_graph, paley_params, polar_graph,
    polar_graph_params, projective_space_lines, steiner_graph, steiner_graph_params,
    steiner_triple_system, switch_oa_graph, witt_design_23,
};
use crate::graph::{distance_graph, Graph};
use crate::hadamard::{rshcd_base4, rshcd_descendant, rshcd_kronecker, rshcd_to_graph, Epsilon, Rshcd};
use crate::{Result, SrgParams};

/// Largest vertex count any default matcher accepts. Every accepted tuple
/// below it is built and oracle-checked by the test suite.
pub const ENVELOPE: u64 = 1300;

fn prime_powers(max: u64) -> impl Iterator<Item = u64> {
    (2..=max).filter(|&q| is_prime_power(q))
}

/// Map-backed entry: `table` sends parameters to a label and builder input.
fn tabled<A: Clone + Send + Sync + 'static>(
    id: &str,
    tier: Tier,
    description: &str,
    table: Vec<(SrgParams, String, A)>,
    build: fn(&A) -> Result<Graph>,
) -> ConstructionEntry {
    let mut map: HashMap<SrgParams, (String, A)> = HashMap::new();
    for (p, label, args) in table {
        if p.n <= ENVELOPE {
            map.entry(p).or_insert((label, args));
        }
    }
    ConstructionEntry::new(id, tier, description, move |p| {
        let (label, args) = map.get(p)?.clone();
        Some(Recipe::new(label, move || build(&args)))
    })
}

fn polar_label(kind: FormKind, dim: usize, q: u64) -> String {
    match kind {
        FormKind::Plus => format!("O+({dim}, {q})"),
        FormKind::Minus => format!("O-({dim}, {q})"),
        FormKind::Parabolic => format!("O({dim}, {q})"),
        FormKind::Symplectic => format!("Sp({dim}, {q})"),
    }
}

fn polar() -> ConstructionEntry {
    let mut table = Vec::new();
    for kind in [FormKind::Plus, FormKind::Minus, FormKind::Parabolic, FormKind::Symplectic] {
        for dim in 4..=12 {
            for q in prime_powers(64) {
                if let Some(p) = polar_graph_params(kind, dim, q) {
                    table.push((p, polar_label(kind, dim, q), (kind, dim, q)));
                }
            }
        }
    }
    tabled("polar", Tier::Geometry, "collinearity graphs of finite polar spaces", table, |&(kind, dim, q)| {
        polar_graph(kind, dim, q)
    })
}

fn affine_polar() -> ConstructionEntry {
    let mut table = Vec::new();
    for plus in [true, false] {
        for two_m in (4..=10).step_by(2) {
            for q in prime_powers(8) {
                if let Some(p) = affine_polar_graph_params(plus, two_m, q) {
                    let label = format!("VO{}({two_m}, {q})", if plus { "+" } else { "-" });
                    table.push((p, label, (plus, two_m, q)));
                }
            }
        }
    }
    tabled("affine-polar", Tier::Geometry, "affine polar graphs VO±(2m, q)", table, |&(plus, two_m, q)| {
        affine_polar_graph(plus, two_m, q)
    })
}

/// GQ(q − 1, q + 1) and its dual, for Ahrens–Szekeres (`q` odd) or
/// T2*(O) of the regular hyperoval (`q` even).
fn gq(id: &str, name: &str, even: bool, dual: bool) -> ConstructionEntry {
    let mut table = Vec::new();
    for q in prime_powers(11).filter(|q| (q % 2 == 0) == even) {
        let (s, t) = if dual { (q + 1, q - 1) } else { (q - 1, q + 1) };
        if let Some(p) = gq_point_graph_params(s, t) {
            let star = if dual { "*" } else { "" };
            table.push((p, format!("{name}({q}){star}; GQ({s}, {t})"), (q, dual, even)));
        }
    }
    let description = format!("{}point graph of {name}(q)", if dual { "dual " } else { "" });
    tabled(id, Tier::Geometry, &description, table, |&(q, dual, even)| {
        let g = if even { gq_t2_star(q, &hyperoval(q)?)? } else { gq_ahrens_szekeres(q)? };
        Ok(if dual { g.dual()?.point_graph() } else { g.point_graph() })
    })
}

fn projective_lines() -> ConstructionEntry {
    let mut table = Vec::new();
    for d in 3..=10u32 {
        for q in prime_powers(64) {
            let Some(v) = q.checked_pow(d + 1).map(|x| (x - 1) / (q - 1)) else { break };
            match steiner_graph_params(v, q + 1) {
                Some(p) if p.n <= ENVELOPE => table.push((p, format!("lines of PG({d}, {q})"), (d as usize, q))),
                _ => break,
            }
        }
    }
    tabled("projective-lines", Tier::Geometry, "lines of PG(d, q), adjacent when they meet", table, |&(d, q)| {
        steiner_graph(&projective_space_lines(d, q)?)
    })
}

fn disjoint_cliques() -> ConstructionEntry {
    ConstructionEntry::new("disjoint-cliques", Tier::Combinatorial, "m disjoint copies of K_a", |p| {
        let a = p.k + 1;
        let ok = p.mu == 0 && p.lambda + 1 == p.k && p.n % a == 0 && p.n / a >= 2 && p.n <= ENVELOPE;
        ok.then(|| {
            let (n, a) = (p.n as usize, a as usize);
            Recipe::new(format!("{} x K{a}", n / a), move || Ok(Graph::from_fn(n, |i, j| i / a == j / a)))
        })
    })
}

fn paley() -> ConstructionEntry {
    ConstructionEntry::new("paley", Tier::Combinatorial, "Paley graph on GF(q), q = 1 mod 4", |p| {
        (p.n <= ENVELOPE && is_prime_power(p.n) && paley_params(p.n) == Some(*p)).then(|| {
            let q = p.n;
            Recipe::new(format!("Paley({q})"), move || paley_graph(q))
        })
    })
}

fn johnson() -> ConstructionEntry {
    ConstructionEntry::new("johnson", Tier::Combinatorial, "J(m, 2), pairs sharing a point", |p| {
        let m = exact_sqrt(1 + 8 * p.n)?.div_ceil(2);
        (m >= 4 && p.n <= ENVELOPE && johnson_params(m) == Some(*p)).then(|| {
            Recipe::new(format!("J({m}, 2)"), move || johnson_graph(m as usize, 2))
        })
    })
}

fn orthogonal_arrays() -> ConstructionEntry {
    ConstructionEntry::new("oa", Tier::Combinatorial, "block graph of OA(k, n) from GF(n)", |p| {
        let s = exact_sqrt(p.n)?;
        if p.n > ENVELOPE || !is_prime_power(s) || p.k % (s - 1) != 0 {
            return None;
        }
        let k = p.k / (s - 1);
        (k >= 2 && k <= s && oa_block_graph_params(k, s) == Some(*p)).then(|| {
            Recipe::new(format!("OA({k}, {s})"), move || {
                Ok(oa_block_graph(&orthogonal_array(k as usize, s as usize)?))
            })
        })
    })
}

fn steiner_triples() -> ConstructionEntry {
    ConstructionEntry::new("steiner-triple", Tier::Combinatorial, "block graph of a Bose STS(v)", |p| {
        if p.mu != 9 || p.k % 3 != 0 || p.n > ENVELOPE {
            return None;
        }
        let v = 2 * (p.k / 3 + 1) + 1;
        (v % 6 == 3 && steiner_graph_params(v, 3) == Some(*p)).then(|| {
            Recipe::new(format!("STS({v})"), move || steiner_graph(&steiner_triple_system(v as usize)?))
        })
    })
}

/// `(s² + 1, s(s−1)/2, (s−1)²/4 − 1, (s−1)²/4)` for odd prime powers `s`,
/// switching `(s+1)/2` symbol classes of OA((s+3)/2, s).
fn switch_oa() -> ConstructionEntry {
    let mut table = Vec::new();
    for s in prime_powers(36).filter(|s| s % 2 == 1) {
        let h = (s - 1) * (s - 1) / 4;
        if let Ok(p) = SrgParams::new(s * s + 1, s * (s - 1) / 2, h - 1, h) {
            let k = s.div_ceil(2);
            table.push((p, format!("switched OA({k}, {s}) plus a vertex"), (k as usize, s as usize)));
        }
    }
    tabled("switch-oa", Tier::Combinatorial, "Seidel switching of an OA block graph with an added vertex", table, |&(k, s)| {
        switch_oa_graph(&orthogonal_array(k + 1, s)?, k)
    })
}

/// Kronecker power of the order-4 RSHCDs of order `4t²`, with one `−` factor
/// when `epsilon` is `−`.
fn kronecker_rshcd(t: u64, epsilon: Epsilon) -> Result<Rshcd> {
    let mut m = rshcd_base4(epsilon);
    let mut order = 4;
    while order < 4 * t * t {
        m = rshcd_kronecker(&m, &rshcd_base4(Epsilon::Plus))?;
        order *= 4;
    }
    Ok(m)
}

fn rshcd_orders() -> impl Iterator<Item = u64> {
    (1..).map(|j| 1u64 << j).take_while(|t| 4 * t * t <= ENVELOPE)
}

fn rshcd() -> ConstructionEntry {
    let mut table = Vec::new();
    for t in rshcd_orders() {
        for e in [Epsilon::Plus, Epsilon::Minus] {
            let kk = 2 * t * t;
            let ll = t * t;
            let (k, l) = match e {
                Epsilon::Plus => (kk - t, ll - t),
                Epsilon::Minus => (kk + t, ll + t),
            };
            if let Ok(p) = SrgParams::new(4 * t * t, k, l, l) {
                table.push((p, format!("RSHCD{e} of order {}", 4 * t * t), (t, e)));
            }
        }
    }
    tabled("rshcd", Tier::Combinatorial, "graphs of Kronecker-product RSHCDs", table, |&(t, e)| {
        rshcd_to_graph(&kronecker_rshcd(t, e)?)
    })
}

fn rshcd_descendants() -> ConstructionEntry {
    let mut table = Vec::new();
    for t in rshcd_orders() {
        if let Ok(p) = SrgParams::new(4 * t * t - 1, 2 * t * t, t * t, t * t) {
            table.push((p, format!("descendant of RSHCD+ of order {}", 4 * t * t), t));
        }
    }
    tabled("rshcd-descendant", Tier::Combinatorial, "descendants of the regular two-graph of an RSHCD", table, |&t| {
        rshcd_descendant(&kronecker_rshcd(t, Epsilon::Plus)?, 0)
    })
}

fn hyperoval_two_weight() -> ConstructionEntry {
    let table = [4, 8]
        .into_iter()
        .filter_map(|q| {
            let p = hyperoval_code_params(q)?;
            Some((p, format!("two-weight code of the hyperoval in PG(2, {q})"), q))
        })
        .collect();
    tabled("hyperoval-code", Tier::Codes, "projective two-weight codes from regular hyperovals", table, |&q| {
        let code = hyperoval_code(q)?;
        let w = TwoWeightWitness::of(&code)?;
        two_weight_graph(&code, &w, q as usize + 2)
    })
}

fn two_weight_database(codes: &Arc<CodeDatabase>) -> ConstructionEntry {
    let mut map: HashMap<SrgParams, usize> = HashMap::new();
    for (i, e) in codes.entries.iter().enumerate() {
        if e.params.n <= ENVELOPE {
            map.entry(e.params).or_insert(i);
        }
    }
    let codes = codes.clone();
    ConstructionEntry::new("two-weight", Tier::Codes, "two-weight codes from the code database", move |p| {
        let i = *map.get(p)?;
        let e = &codes.entries[i];
        let label = format!(
            "[{}, {}]_{} two-weight code {}",
            e.code.length(),
            e.code.dimension(),
            e.code.field().order(),
            e.name.trim_end_matches(".txt")
        );
        let codes = codes.clone();
        Some(Recipe::new(label, move || codes.entries[i].graph()))
    })
}

fn golay() -> ConstructionEntry {
    let table = vec![
        (
            SrgParams { n: 243, k: 110, lambda: 37, mu: 60 },
            "dual ternary Golay code, distance 9".to_string(),
            false,
        ),
        (
            SrgParams { n: 1288, k: 792, lambda: 476, mu: 504 },
            "weight-12 binary Golay words, sum of weight 12".to_string(),
            true,
        ),
    ];
    tabled("golay", Tier::Codes, "graphs from the Golay codes", table, |&binary| {
        if binary {
            codeword_support_graph_1288()
        } else {
            code_distance_graph(&golay_ternary_11()?.dual()?, 9)
        }
    })
}

fn johnson_distance() -> ConstructionEntry {
    let table = vec![
        (SrgParams { n: 120, k: 63, lambda: 30, mu: 36 }, "J(10, 3) distance 2".to_string(), (10, 3, vec![2])),
        (SrgParams { n: 126, k: 25, lambda: 8, mu: 4 }, "J(9, 4) distances 1 and 4".to_string(), (9, 4, vec![1, 4])),
    ];
    tabled("johnson-distance", Tier::Sporadic, "distance graphs of Johnson graphs", table, |(m, j, d)| {
        distance_graph(&johnson_graph(*m, *j)?, d)
    })
}

fn witt() -> ConstructionEntry {
    let table = vec![
        (SrgParams { n: 253, k: 140, lambda: 87, mu: 65 }, "blocks of S(4, 7, 23) meeting in 3 points".to_string(), 0usize),
        (SrgParams { n: 176, k: 105, lambda: 68, mu: 54 }, "blocks of S(4, 7, 23) missing a point, meeting in 3".to_string(), 1),
        (SrgParams { n: 120, k: 77, lambda: 52, mu: 44 }, "blocks of S(4, 7, 23) missing two points, meeting in 3".to_string(), 2),
    ];
    tabled("witt", Tier::Sporadic, "block graphs of the Witt design on 23 points", table, |&avoid| {
        let removed: Vec<usize> = (0..avoid).collect();
        let d = witt_design_23()?.blocks_avoiding(&removed)?;
        Ok(block_intersection_graph(&d, &[3]))
    })
}

fn mathon_rosa() -> ConstructionEntry {
    let table = vec![(
        SrgParams { n: 280, k: 117, lambda: 44, mu: 52 },
        "partitions of a 9-set into triples".to_string(),
        (),
    )];
    tabled("mathon-rosa", Tier::Sporadic, "Mathon-Rosa graph on 280 vertices", table, |_| Ok(mathon_rosa_graph()))
}

pub(super) fn default_entries(codes: &Arc<CodeDatabase>) -> Vec<ConstructionEntry> {
    vec![
        polar(),
        affine_polar(),
        gq("as", "AS", false, false),
        gq("as-dual", "AS", false, true),
        gq("t2-star", "T2*", true, false),
        gq("t2-star-dual", "T2*", true, true),
        projective_lines(),
        disjoint_cliques(),
        paley(),
        johnson(),
        orthogonal_arrays(),
        steiner_triples(),
        switch_oa(),
        rshcd(),
        rshcd_descendants(),
        hyperoval_two_weight(),
        two_weight_database(codes),
        golay(),
        johnson_distance(),
        witt(),
        mathon_rosa(),
        ConstructionEntry::complement_wrapper(),
    ]
}
