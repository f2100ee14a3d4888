//! Regular symmetric Hadamard matrices with constant diagonal.

use std::fmt;

use super::matrix::{conference_paley, PmOneMatrix};
use crate::algebra::exact_sqrt;
use crate::graph::{descendant, is_strongly_regular, Graph};
use crate::{Error, Result};

/// Largest order for which [`find_flip_split`] searches exhaustively.
pub const SPLIT_SEARCH_LIMIT: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Epsilon {
    Plus,
    Minus,
}

impl Epsilon {
    pub fn sign(self) -> i64 {
        match self {
            Epsilon::Plus => 1,
            Epsilon::Minus => -1,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Epsilon::Plus => Epsilon::Minus,
            Epsilon::Minus => Epsilon::Plus,
        }
    }
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Epsilon::Plus => "+",
            Epsilon::Minus => "-",
        })
    }
}

/// Row sum `δ ε √n` for diagonal value `δ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RshcdWitness {
    pub epsilon: Epsilon,
    pub delta: i8,
    pub row_sum: i64,
}

/// A matrix that has passed every RSHCD check. The only way to obtain one
/// is through [`Rshcd::verify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rshcd {
    matrix: PmOneMatrix,
    witness: RshcdWitness,
}

impl Rshcd {
    pub fn verify(matrix: PmOneMatrix) -> Result<Self> {
        let m = matrix.order();
        let fail = |why: String| Err(Error::verification(format!("not an RSHCD: {why}")));
        if m == 0 {
            return fail("empty matrix".into());
        }
        if !matrix.is_symmetric() {
            return fail("not symmetric".into());
        }
        let delta = matrix.get(0, 0);
        if (0..m).any(|i| matrix.get(i, i) != delta) {
            return fail("diagonal is not constant".into());
        }
        let row_sum = matrix.row_sum(0);
        if (1..m).any(|i| matrix.row_sum(i) != row_sum) {
            return fail("row sums differ".into());
        }
        let Some(root) = exact_sqrt(m as u64) else {
            return fail(format!("order {m} is not a square"));
        };
        if row_sum.unsigned_abs() != root {
            return fail(format!("row sum {row_sum} is not ±{root}"));
        }
        if !matrix.is_hadamard() {
            return fail("M Mᵀ is not mI".into());
        }
        let epsilon = if row_sum * delta as i64 > 0 { Epsilon::Plus } else { Epsilon::Minus };
        Ok(Rshcd {
            matrix,
            witness: RshcdWitness {
                epsilon,
                delta,
                row_sum,
            },
        })
    }

    pub fn matrix(&self) -> &PmOneMatrix {
        &self.matrix
    }

    pub fn witness(&self) -> RshcdWitness {
        self.witness
    }

    pub fn order(&self) -> usize {
        self.matrix.order()
    }

    pub fn epsilon(&self) -> Epsilon {
        self.witness.epsilon
    }
}

/// The order-4 RSHCD of sign `epsilon`: for `+` the diagonal is `+1` with
/// a single `−1` per row on the anti-diagonal, for `−` it is `J − 2I`.
pub fn rshcd_base4(epsilon: Epsilon) -> Rshcd {
    let m = PmOneMatrix::from_fn(4, |i, j| match epsilon {
        Epsilon::Plus if i + j == 3 => -1,
        Epsilon::Plus => 1,
        Epsilon::Minus if i == j => -1,
        Epsilon::Minus => 1,
    });
    Rshcd::verify(m).expect("order-4 base matrices are RSHCDs")
}

/// Kronecker product, re-verified; the signs multiply.
pub fn rshcd_kronecker(a: &Rshcd, b: &Rshcd) -> Result<Rshcd> {
    let r = Rshcd::verify(a.matrix.kronecker(&b.matrix)?)?;
    let expected = if a.epsilon() == b.epsilon() { Epsilon::Plus } else { Epsilon::Minus };
    if r.epsilon() != expected {
        return Err(Error::verification("Kronecker product has the wrong sign"));
    }
    Ok(r)
}

/// The first half `0..m/2` of the index set.
pub fn natural_split(order: usize) -> Vec<usize> {
    (0..order / 2).collect()
}

fn half_mask(order: usize, first: &[usize]) -> Option<Vec<bool>> {
    if !order.is_multiple_of(2) || first.len() != order / 2 {
        return None;
    }
    let mut mask = vec![false; order];
    for &i in first {
        if i >= order || mask[i] {
            return None;
        }
        mask[i] = true;
    }
    Some(mask)
}

/// Whether both diagonal blocks of the split `first | rest` have all row sums 0.
pub fn flip_eligible(m: &PmOneMatrix, first: &[usize]) -> bool {
    let Some(mask) = half_mask(m.order(), first) else { return false };
    (0..m.order()).all(|i| {
        let s: i64 = (0..m.order())
            .filter(|&j| mask[j] == mask[i])
            .map(|j| m.get(i, j) as i64)
            .sum();
        s == 0
    })
}

/// Negates the two off-diagonal blocks of the split given by `first`.
/// Requires zero row sums in both diagonal blocks; the result has the
/// opposite sign and the same diagonal.
pub fn rshcd_flip(m: &Rshcd, first: &[usize]) -> Result<Rshcd> {
    let Some(mask) = half_mask(m.order(), first) else {
        return Err(Error::invalid("split must name exactly half of the indices, each once"));
    };
    if !flip_eligible(m.matrix(), first) {
        return Err(Error::invalid("flip needs zero row sums in both diagonal blocks"));
    }
    let a = m.matrix();
    let t = PmOneMatrix::from_fn(a.order(), |i, j| if mask[i] == mask[j] { a.get(i, j) } else { -a.get(i, j) });
    let r = Rshcd::verify(t)?;
    if r.epsilon() != m.epsilon().flipped() || r.witness.delta != m.witness.delta {
        return Err(Error::verification("flip did not change the sign alone"));
    }
    Ok(r)
}

/// First split (in lexicographic order of the half containing index 0)
/// on which [`rshcd_flip`] applies.
pub fn find_flip_split(m: &Rshcd) -> Result<Option<Vec<usize>>> {
    let order = m.order();
    if order > SPLIT_SEARCH_LIMIT {
        return Err(Error::SizeLimit {
            what: "split search order".into(),
            size: order as u128,
            limit: SPLIT_SEARCH_LIMIT as u128,
        });
    }
    if !order.is_multiple_of(2) {
        return Ok(None);
    }
    fn rec(m: &PmOneMatrix, start: usize, cur: &mut Vec<usize>) -> bool {
        let half = m.order() / 2;
        if cur.len() == half {
            return flip_eligible(m, cur);
        }
        for x in start..=(m.order() - (half - cur.len())) {
            cur.push(x);
            if rec(m, x + 1, cur) {
                return true;
            }
            cur.pop();
        }
        false
    }
    let mut cur = vec![0];
    Ok(rec(m.matrix(), 1, &mut cur).then_some(cur))
}

/// `[[M₁₂, M₁₁], [M₁₁ᵀ, M₂₁]]` on the natural split, returned only when it
/// is an RSHCD whose diagonal blocks have zero row sums.
pub fn rshcd_twist(m: &Rshcd) -> Option<Rshcd> {
    let order = m.order();
    if !order.is_multiple_of(2) {
        return None;
    }
    let n = order / 2;
    let a = m.matrix();
    let t = PmOneMatrix::from_fn(order, |i, j| match (i < n, j < n) {
        (true, true) => a.get(i, j + n),
        (true, false) => a.get(i, j - n),
        (false, true) => a.get(j, i - n),
        (false, false) => a.get(i, j - n),
    });
    let r = Rshcd::verify(t).ok()?;
    flip_eligible(r.matrix(), &natural_split(order)).then_some(r)
}

/// Vertices are rows; `i ~ j` when `M_ij ≠ δ`. Fails unless the oracle accepts.
pub fn rshcd_to_graph(m: &Rshcd) -> Result<Graph> {
    let a = m.matrix();
    let delta = m.witness.delta;
    let g = Graph::from_fn_par(a.order(), |i, j| a.get(i, j) != delta);
    if is_strongly_regular(&g).is_none() {
        return Err(Error::NotStronglyRegular(format!(
            "graph of the order-{} RSHCD{}",
            a.order(),
            m.epsilon()
        )));
    }
    Ok(g)
}

/// Inverse of [`rshcd_to_graph`]: `δ` on the diagonal and between
/// non-neighbours, `−δ` between neighbours.
pub fn graph_to_rshcd(g: &Graph, delta: i8) -> Result<Rshcd> {
    if delta.abs() != 1 {
        return Err(Error::invalid("diagonal value must be +1 or -1"));
    }
    let m = PmOneMatrix::from_fn(g.order(), |i, j| if g.has_edge(i, j) { -delta } else { delta });
    Rshcd::verify(m)
}

fn checked_descendant(g: &Graph, v: usize, what: &str) -> Result<Graph> {
    let d = descendant(g, v)?;
    if is_strongly_regular(&d).is_none() {
        return Err(Error::NotStronglyRegular(format!("descendant of {what}")));
    }
    Ok(d)
}

/// Descendant at `v` of the two-graph whose Seidel matrix is `M − δI`.
pub fn rshcd_descendant(m: &Rshcd, v: usize) -> Result<Graph> {
    let g = rshcd_to_graph(m)?;
    checked_descendant(&g, v, &format!("an order-{} RSHCD", m.order()))
}

/// Descendant at `v` of the two-graph of the Paley conference matrix of
/// order `q + 1`, with `−1` entries as edges.
pub fn conference_descendant(q: u64, v: usize) -> Result<Graph> {
    let c = conference_paley(q)?;
    let g = Graph::from_fn_par(c.order(), |i, j| c.get(i, j) == -1);
    checked_descendant(&g, v, &format!("the order-{} conference matrix", q + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::SrgParams;

    fn p(n: u64, k: u64, lambda: u64, mu: u64) -> SrgParams {
        SrgParams { n, k, lambda, mu }
    }

    #[test]
    fn base_matrices() {
        let plus = rshcd_base4(Epsilon::Plus);
        assert_eq!(plus.witness(), RshcdWitness { epsilon: Epsilon::Plus, delta: 1, row_sum: 2 });
        let minus = rshcd_base4(Epsilon::Minus);
        assert_eq!(minus.witness(), RshcdWitness { epsilon: Epsilon::Minus, delta: -1, row_sum: 2 });
        let g = rshcd_to_graph(&plus).unwrap();
        let q = is_strongly_regular(&g).unwrap();
        assert_eq!(q, p(4, 1, 0, 0));
        assert!(q.is_degenerate());
        // J − 2I gives K4, which the oracle refuses
        assert!(rshcd_to_graph(&minus).is_err());
    }

    #[test]
    fn order_sixteen_products() {
        let plus = rshcd_base4(Epsilon::Plus);
        let minus = rshcd_base4(Epsilon::Minus);
        let pp = rshcd_kronecker(&plus, &plus).unwrap();
        assert_eq!(pp.epsilon(), Epsilon::Plus);
        assert_eq!(is_strongly_regular(&rshcd_to_graph(&pp).unwrap()), Some(p(16, 6, 2, 2)));
        let pm = rshcd_kronecker(&plus, &minus).unwrap();
        assert_eq!(pm.epsilon(), Epsilon::Minus);
        assert_eq!(is_strongly_regular(&rshcd_to_graph(&pm).unwrap()), Some(p(16, 10, 6, 6)));
        let mm = rshcd_kronecker(&minus, &minus).unwrap();
        assert_eq!(mm.epsilon(), Epsilon::Plus);
    }

    #[test]
    fn flip_precondition_on_base() {
        let plus = rshcd_base4(Epsilon::Plus);
        assert!(rshcd_flip(&plus, &natural_split(4)).is_err());
        // a different pairing of the rows does satisfy the precondition
        let split = find_flip_split(&plus).unwrap().unwrap();
        assert_eq!(split, vec![0, 3]);
        assert_eq!(rshcd_flip(&plus, &split).unwrap().epsilon(), Epsilon::Minus);
        // J − 2I has diagonal blocks [[−1, 1], [1, −1]]
        let minus = rshcd_base4(Epsilon::Minus);
        assert_eq!(rshcd_flip(&minus, &natural_split(4)).unwrap().epsilon(), Epsilon::Plus);

        let pp = rshcd_kronecker(&rshcd_base4(Epsilon::Plus), &rshcd_base4(Epsilon::Plus)).unwrap();
        assert!(rshcd_flip(&pp, &[0, 1, 2]).is_err());
        assert!(rshcd_flip(&pp, &[0, 0, 1, 2, 3, 4, 5, 6]).is_err());
    }

    #[test]
    fn flip_on_found_split() {
        let base = [rshcd_base4(Epsilon::Plus), rshcd_base4(Epsilon::Minus)];
        let mut flipped = 0;
        for a in &base {
            for b in &base {
                let m = rshcd_kronecker(a, b).unwrap();
                let Some(split) = find_flip_split(&m).unwrap() else { continue };
                let t = rshcd_flip(&m, &split).unwrap();
                assert_eq!(t.epsilon(), m.epsilon().flipped());
                assert_eq!(t.witness().delta, m.witness().delta);
                assert!(rshcd_to_graph(&t).is_ok());
                assert_eq!(rshcd_flip(&t, &split).unwrap(), m);
                flipped += 1;
            }
        }
        assert!(flipped > 0);
    }

    #[test]
    fn twist_of_base_matrices() {
        assert!(rshcd_twist(&rshcd_base4(Epsilon::Minus)).is_none());
        // the + base is a fixed point up to relabelling, so its twist applies
        let t = rshcd_twist(&rshcd_base4(Epsilon::Plus)).unwrap();
        let f = rshcd_flip(&t, &natural_split(4)).unwrap();
        assert_eq!(f.epsilon(), Epsilon::Minus);
    }

    #[test]
    fn graph_round_trip() {
        let pm = rshcd_kronecker(&rshcd_base4(Epsilon::Plus), &rshcd_base4(Epsilon::Minus)).unwrap();
        let g = rshcd_to_graph(&pm).unwrap();
        assert_eq!(graph_to_rshcd(&g, pm.witness().delta).unwrap(), pm);
        let neg = graph_to_rshcd(&g, -pm.witness().delta).unwrap();
        assert_eq!(neg.matrix(), &pm.matrix().negate());
        assert!(graph_to_rshcd(&g, 0).is_err());
    }

    #[test]
    fn descendants() {
        let pp = rshcd_kronecker(&rshcd_base4(Epsilon::Plus), &rshcd_base4(Epsilon::Plus)).unwrap();
        assert_eq!(is_strongly_regular(&rshcd_descendant(&pp, 0).unwrap()), Some(p(15, 8, 4, 4)));
        assert_eq!(is_strongly_regular(&conference_descendant(9, 0).unwrap()), Some(p(9, 4, 1, 2)));
        assert_eq!(is_strongly_regular(&conference_descendant(13, 5).unwrap()), Some(p(13, 6, 2, 3)));
    }
}
