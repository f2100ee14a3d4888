//! Orthogonal arrays from finite fields and their block graphs.

use crate::algebra::{is_prime_power, FiniteField};
use crate::graph::{is_strongly_regular, seidel_switch, union_with_isolated, Graph};
use crate::{Error, Result, SrgParams};

/// `n²` rows of `k` symbols from `0..n`; every pair of columns shows every
/// ordered pair of symbols exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthogonalArray {
    k: usize,
    n: usize,
    rows: Vec<Vec<u32>>,
}

impl OrthogonalArray {
    /// Verifies the pairwise property before accepting `rows`.
    pub fn new(k: usize, n: usize, rows: Vec<Vec<u32>>) -> Result<Self> {
        if rows.len() != n * n || rows.iter().any(|r| r.len() != k || r.iter().any(|&s| s as usize >= n)) {
            return Err(Error::verification(format!("OA({k},{n}) needs {} rows of length {k}", n * n)));
        }
        for a in 0..k {
            for b in (a + 1)..k {
                let mut seen = vec![false; n * n];
                for r in &rows {
                    let idx = r[a] as usize * n + r[b] as usize;
                    if std::mem::replace(&mut seen[idx], true) {
                        return Err(Error::verification(format!(
                            "columns {a} and {b} repeat the symbol pair ({}, {})",
                            r[a], r[b]
                        )));
                    }
                }
            }
        }
        Ok(OrthogonalArray { k, n, rows })
    }

    pub fn columns(&self) -> usize {
        self.k
    }

    pub fn symbols(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// The array restricted to its first `k` columns.
    pub fn truncate(&self, k: usize) -> Result<Self> {
        if k > self.k {
            return Err(Error::invalid(format!("cannot keep {k} of {} columns", self.k)));
        }
        Ok(OrthogonalArray {
            k,
            n: self.n,
            rows: self.rows.iter().map(|r| r[..k].to_vec()).collect(),
        })
    }
}

/// OA(k, n) for a prime power `n` and `2 ≤ k ≤ n + 1`.
///
/// Rows are indexed by `(x, y)` in lexicographic order; the columns are `x`,
/// `y`, then `a·x + y` for the first `k − 2` nonzero field elements `a`.
pub fn orthogonal_array(k: usize, n: usize) -> Result<OrthogonalArray> {
    if !is_prime_power(n as u64) {
        return Err(Error::unsupported(format!(
            "OA({k},{n}): only prime-power orders are constructed"
        )));
    }
    if k < 2 || k > n + 1 {
        return Err(Error::unsupported(format!("OA({k},{n}) needs 2 <= k <= n + 1")));
    }
    let f = FiniteField::of_order(n as u64)?;
    let mut rows = Vec::with_capacity(n * n);
    for x in f.elements() {
        for y in f.elements() {
            let mut row = vec![x, y];
            row.extend((1..(k as u32 - 1)).map(|a| f.add(f.mul(a, x), y)));
            rows.push(row);
        }
    }
    OrthogonalArray::new(k, n, rows)
}

/// Rows adjacent when they agree in exactly one column.
pub fn oa_block_graph(oa: &OrthogonalArray) -> Graph {
    let rows = oa.rows();
    Graph::from_fn_par(rows.len(), |i, j| {
        rows[i].iter().zip(&rows[j]).filter(|(a, b)| a == b).count() == 1
    })
}

/// `(n², k(n−1), n−2+(k−1)(k−2), k(k−1))`.
pub fn oa_block_graph_params(k: u64, n: u64) -> Option<SrgParams> {
    SrgParams::new(n * n, k * (n - 1), (n + (k - 1) * (k - 2)).checked_sub(2)?, k * (k - 1)).ok()
}

/// Block graph of the first `k` columns of `oa_plus` (which has `k + 1`),
/// plus one isolated vertex, Seidel-switched on the rows whose last symbol
/// is below `c` together with the new vertex.
///
/// Only returns graphs accepted by the oracle.
pub fn switch_oa_graph(oa_plus: &OrthogonalArray, c: usize) -> Result<Graph> {
    let n = oa_plus.symbols();
    if c == 0 || c > n {
        return Err(Error::invalid(format!("class count must be in 1..={n}, got {c}")));
    }
    if oa_plus.columns() < 3 {
        return Err(Error::invalid("need at least three columns"));
    }
    let k = oa_plus.columns() - 1;
    let base = oa_block_graph(&oa_plus.truncate(k)?);
    let g = union_with_isolated(&base, 1);
    let mut set: Vec<usize> = oa_plus
        .rows()
        .iter()
        .enumerate()
        .filter(|(_, r)| (r[k] as usize) < c)
        .map(|(i, _)| i)
        .collect();
    set.push(n * n);
    let h = seidel_switch(&g, &set)?;
    if is_strongly_regular(&h).is_none() {
        return Err(Error::NotStronglyRegular(format!("switch-OA with k = {k}, n = {n}, c = {c}")));
    }
    Ok(h)
}

/// Switch-OA parameter triples `(k, n, c)` accepted by the oracle, for
/// prime powers `n ≤ max_n`, `2 ≤ k ≤ n`, `1 ≤ c ≤ n`, with the measured
/// parameters. Ordered by `n`, then `k`, then `c`.
pub fn switch_oa_sweep(max_n: usize) -> Vec<(usize, usize, usize, SrgParams)> {
    let mut found = Vec::new();
    for n in (2..=max_n).filter(|&n| is_prime_power(n as u64)) {
        for k in 2..=n {
            let Ok(oa) = orthogonal_array(k + 1, n) else { continue };
            for c in 1..=n {
                if let Ok(g) = switch_oa_graph(&oa, c) {
                    if let Some(p) = is_strongly_regular(&g) {
                        found.push((k, n, c, p));
                    }
                }
            }
        }
    }
    found
}
