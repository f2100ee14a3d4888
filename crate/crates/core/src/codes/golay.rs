//! Golay codes from quadratic-residue circulants, and MacWilliams transforms.

use super::linear::{weight, LinearCode};
use crate::algebra::{binomial, FiniteField};
use crate::graph::Graph;
use crate::{Error, Result};

/// Code spanned by the cyclic shifts of the indicator of the quadratic
/// nonresidues mod `p` over GF(`r`).
fn nonresidue_cyclic_code(p: u32, r: u64) -> Result<LinearCode> {
    let f = FiniteField::of_order(r)?;
    let residues: Vec<u32> = (1..p).map(|x| x * x % p).collect();
    let base: Vec<u32> = (0..p)
        .map(|i| u32::from(i != 0 && !residues.contains(&i)))
        .collect();
    let shifts: Vec<Vec<u32>> = (0..p as usize)
        .map(|s| (0..p as usize).map(|j| base[(j + p as usize - s) % p as usize]).collect())
        .collect();
    LinearCode::from_spanning(f, &shifts)
}

fn checked(code: LinearCode, length: usize, dim: usize, dist: usize, name: &str) -> Result<LinearCode> {
    if code.length() != length || code.dimension() != dim || code.minimum_distance()? != dist {
        return Err(Error::verification(format!(
            "{name}: got [{}, {}, {}]",
            code.length(),
            code.dimension(),
            code.minimum_distance()?
        )));
    }
    Ok(code)
}

/// The binary [23, 12, 7] Golay code.
pub fn golay_binary_23() -> Result<LinearCode> {
    checked(nonresidue_cyclic_code(23, 2)?, 23, 12, 7, "binary Golay code")
}

/// The ternary [11, 6, 5] Golay code.
pub fn golay_ternary_11() -> Result<LinearCode> {
    checked(nonresidue_cyclic_code(11, 3)?, 11, 6, 5, "ternary Golay code")
}

/// The 1288 weight-12 words of the binary Golay code, adjacent when their
/// sum has weight 12.
pub fn codeword_support_graph_1288() -> Result<Graph> {
    let code = golay_binary_23()?;
    let words: Vec<u32> = code
        .codewords()?
        .into_iter()
        .filter(|w| weight(w) == 12)
        .map(|w| w.iter().enumerate().fold(0u32, |acc, (i, &b)| acc | b << i))
        .collect();
    Ok(Graph::from_fn_par(words.len(), |i, j| (words[i] ^ words[j]).count_ones() == 12))
}

/// Weight distribution of the dual code from that of the code:
/// `B_j = q^{−d} Σ_i A_i K_j(i)` with Krawtchouk polynomials
/// `K_j(i) = Σ_s (−1)^s (q−1)^{j−s} C(i,s) C(ℓ−i, j−s)`.
pub fn macwilliams_transform(dist: &[u64], q: u64) -> Option<Vec<u64>> {
    let len = dist.len() - 1;
    let size: i128 = dist.iter().map(|&a| a as i128).sum();
    (0..=len)
        .map(|j| {
            let mut total: i128 = 0;
            for (i, &a) in dist.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let mut k: i128 = 0;
                for s in 0..=j.min(i) {
                    let term = binomial(i as u64, s as u64) as i128
                        * binomial((len - i) as u64, (j - s) as u64) as i128
                        * (q as i128 - 1).pow((j - s) as u32);
                    k += if s % 2 == 0 { term } else { -term };
                }
                total += a as i128 * k;
            }
            (total % size == 0 && total >= 0).then(|| (total / size) as u64)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::code_distance_graph;
    use crate::graph::is_strongly_regular;
    use crate::SrgParams;

    #[test]
    fn binary_golay_distribution() {
        let d = golay_binary_23().unwrap().weight_distribution().unwrap();
        let mut expect = vec![0u64; 24];
        for (w, a) in [(0, 1), (7, 253), (8, 506), (11, 1288), (12, 1288), (15, 506), (16, 253), (23, 1)] {
            expect[w] = a;
        }
        assert_eq!(d, expect);
    }

    #[test]
    fn ternary_golay_and_dual() {
        let c = golay_ternary_11().unwrap();
        let d = c.weight_distribution().unwrap();
        assert_eq!((d[5], d[6], d[8], d[9], d[11]), (132, 132, 330, 110, 24));
        let dual = c.dual().unwrap();
        assert_eq!(dual.dimension(), 5);
        assert_eq!(dual.size(), 243);
        let g = code_distance_graph(&dual, 9).unwrap();
        assert_eq!(is_strongly_regular(&g), Some(SrgParams { n: 243, k: 110, lambda: 37, mu: 60 }));
    }

    #[test]
    fn macwilliams_matches_enumeration() {
        let c = golay_binary_23().unwrap();
        let a = c.weight_distribution().unwrap();
        let b = c.dual().unwrap().weight_distribution().unwrap();
        assert_eq!(macwilliams_transform(&a, 2).unwrap(), b);
        let t = golay_ternary_11().unwrap();
        let a = t.weight_distribution().unwrap();
        let b = t.dual().unwrap().weight_distribution().unwrap();
        assert_eq!(macwilliams_transform(&a, 3).unwrap(), b);
    }
}
