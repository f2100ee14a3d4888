//! Johnson graphs, Paley graphs and the Mathon–Rosa graph on 280 vertices.

use crate::algebra::FiniteField;
use crate::graph::Graph;
use crate::{Error, Result, SrgParams};

/// All `j`-subsets of `0..m` as bitmasks, in lexicographic order of their
/// sorted elements.
pub fn subsets(m: usize, j: usize) -> Vec<u64> {
    fn rec(start: usize, m: usize, left: usize, acc: u64, out: &mut Vec<u64>) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for x in start..=(m - left) {
            rec(x + 1, m, left - 1, acc | 1 << x, out);
        }
    }
    let mut out = Vec::new();
    if j <= m {
        rec(0, m, j, 0, &mut out);
    }
    out
}

/// J(m, j): `j`-subsets of an `m`-set, adjacent when they share `j − 1` points.
pub fn johnson_graph(m: usize, j: usize) -> Result<Graph> {
    if j == 0 || 2 * j > m || m > 64 {
        return Err(Error::invalid(format!("J({m},{j}) needs 1 <= j <= m/2 and m <= 64")));
    }
    let sets = subsets(m, j);
    Ok(Graph::from_fn_par(sets.len(), |a, b| {
        (sets[a] & sets[b]).count_ones() as usize == j - 1
    }))
}

/// `(C(m,2), 2(m−2), m−2, 4)`.
pub fn johnson_params(m: u64) -> Option<SrgParams> {
    SrgParams::new(m * (m - 1) / 2, 2 * (m.checked_sub(2)?), m - 2, 4).ok()
}

/// Paley graph on `F_q`, `q ≡ 1 (mod 4)`: `x ~ y` when `x − y` is a nonzero square.
pub fn paley_graph(q: u64) -> Result<Graph> {
    if q % 4 != 1 {
        return Err(Error::invalid(format!("Paley graphs need q = 1 (mod 4), got {q}")));
    }
    let f = FiniteField::of_order(q)?;
    Ok(Graph::from_fn_par(q as usize, |x, y| {
        f.is_square(f.sub(x as u32, y as u32))
    }))
}

/// `(q, (q−1)/2, (q−5)/4, (q−1)/4)`.
pub fn paley_params(q: u64) -> Option<SrgParams> {
    (q % 4 == 1 && q >= 5).then(|| SrgParams {
        n: q,
        k: (q - 1) / 2,
        lambda: (q - 5) / 4,
        mu: (q - 1) / 4,
    })
}

/// Partitions of `0..9` into three 3-sets, each encoded by the class index
/// of every point with classes numbered by their smallest element.
pub fn nine_point_partitions() -> Vec<[u8; 9]> {
    let mut out = Vec::new();
    for a in subsets(9, 3).into_iter().filter(|s| s & 1 == 1) {
        let rest: Vec<usize> = (0..9).filter(|&x| a >> x & 1 == 0).collect();
        for b in subsets(6, 3) {
            if b & 1 == 0 {
                continue;
            }
            let mut labels = [0u8; 9];
            for (i, &x) in rest.iter().enumerate() {
                labels[x] = if b >> i & 1 == 1 { 1 } else { 2 };
            }
            out.push(labels);
        }
    }
    out
}

/// The 280 partitions of a 9-set into three triples; two partitions are
/// adjacent when their 3×3 table of pairwise class intersections does not
/// have exactly 7 nonempty cells.
pub fn mathon_rosa_graph() -> Graph {
    let parts = nine_point_partitions();
    Graph::from_fn_par(parts.len(), |i, j| cross_cells(&parts[i], &parts[j]) != 7)
}

/// Number of nonempty cells `A_a ∩ B_b`.
pub fn cross_cells(a: &[u8; 9], b: &[u8; 9]) -> usize {
    let mut cells = [false; 9];
    for x in 0..9 {
        cells[a[x] as usize * 3 + b[x] as usize] = true;
    }
    cells.iter().filter(|&&c| c).count()
}
