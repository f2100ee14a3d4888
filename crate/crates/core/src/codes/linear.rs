use rayon::prelude::*;

use crate::algebra::{vector_from_index, Elem, FiniteField};
use crate::graph::Graph;
use crate::{Error, Result};

/// Cap on `q^d` for full codeword enumeration.
pub const ENUMERATION_LIMIT: u64 = 1 << 20;

/// Cap on `q^d` for graphs whose vertices are codewords.
pub const GRAPH_LIMIT: u64 = 1 << 12;

/// A linear code given by a full-rank `d × ℓ` generator matrix.
#[derive(Debug, Clone)]
pub struct LinearCode {
    field: FiniteField,
    generator: Vec<Vec<Elem>>,
    length: usize,
}

/// Reduced row echelon form; returns the nonzero rows.
pub(crate) fn row_reduce(f: &FiniteField, rows: &[Vec<Elem>]) -> Vec<Vec<Elem>> {
    let mut m: Vec<Vec<Elem>> = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, pivot);
        let inv = f.inv(m[rank][c]).unwrap();
        for x in m[rank].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let prow = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let factor = row[c];
                for (x, &p) in row.iter_mut().zip(&prow) {
                    *x = f.sub(*x, f.mul(factor, p));
                }
            }
        }
        rank += 1;
    }
    m.truncate(rank);
    m
}

impl LinearCode {
    /// Accepts `generator` only if its rows are linearly independent.
    pub fn new(field: FiniteField, generator: Vec<Vec<Elem>>) -> Result<Self> {
        let length = generator.first().map_or(0, |r| r.len());
        if generator.is_empty() {
            return Err(Error::invalid("a code needs at least one generator row"));
        }
        if generator.iter().any(|r| r.len() != length || r.iter().any(|&x| x >= field.order())) {
            return Err(Error::invalid("generator rows must have equal length and field entries"));
        }
        let rank = row_reduce(&field, &generator).len();
        if rank != generator.len() {
            return Err(Error::invalid(format!(
                "generator has rank {rank} but {} rows",
                generator.len()
            )));
        }
        Ok(LinearCode {
            field,
            generator,
            length,
        })
    }

    /// The code spanned by `rows`, with its reduced echelon basis as generator.
    pub fn from_spanning(field: FiniteField, rows: &[Vec<Elem>]) -> Result<Self> {
        let basis = row_reduce(&field, rows);
        Self::new(field, basis)
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dimension(&self) -> usize {
        self.generator.len()
    }

    pub fn generator(&self) -> &[Vec<Elem>] {
        &self.generator
    }

    /// `q^d`, saturating.
    pub fn size(&self) -> u64 {
        (self.field.order() as u64).saturating_pow(self.dimension() as u32)
    }

    fn check_size(&self, limit: u64, what: &str) -> Result<()> {
        if self.size() > limit {
            return Err(Error::SizeLimit {
                what: what.to_string(),
                size: self.size() as u128,
                limit: limit as u128,
            });
        }
        Ok(())
    }

    pub fn encode(&self, message: &[Elem]) -> Vec<Elem> {
        let f = &self.field;
        let mut word = vec![0; self.length];
        for (&m, row) in message.iter().zip(&self.generator) {
            if m == 0 {
                continue;
            }
            for (w, &g) in word.iter_mut().zip(row) {
                *w = f.add(*w, f.mul(m, g));
            }
        }
        word
    }

    /// Codeword for the `i`-th message in lexicographic order.
    pub fn codeword(&self, i: u64) -> Vec<Elem> {
        self.encode(&vector_from_index(&self.field, self.dimension(), i))
    }

    /// All codewords, indexed by lexicographic message order.
    pub fn codewords(&self) -> Result<Vec<Vec<Elem>>> {
        self.check_size(ENUMERATION_LIMIT, "codeword enumeration")?;
        Ok((0..self.size()).into_par_iter().map(|i| self.codeword(i)).collect())
    }

    /// Hamming weight of every codeword, in message order.
    pub fn weights(&self) -> Result<Vec<usize>> {
        self.check_size(ENUMERATION_LIMIT, "codeword enumeration")?;
        Ok((0..self.size())
            .into_par_iter()
            .map(|i| weight(&self.codeword(i)))
            .collect())
    }

    /// `A_w` for `w = 0..=ℓ`.
    pub fn weight_distribution(&self) -> Result<Vec<u64>> {
        let mut dist = vec![0u64; self.length + 1];
        for w in self.weights()? {
            dist[w] += 1;
        }
        Ok(dist)
    }

    pub fn minimum_distance(&self) -> Result<usize> {
        let dist = self.weight_distribution()?;
        Ok((1..dist.len()).find(|&w| dist[w] > 0).unwrap_or(0))
    }

    /// Generator of the orthogonal complement under the standard dot product.
    pub fn dual(&self) -> Result<LinearCode> {
        let f = &self.field;
        let rref = row_reduce(f, &self.generator);
        let mut pivots = Vec::new();
        for row in &rref {
            pivots.push(row.iter().position(|&x| x != 0).unwrap());
        }
        let free: Vec<usize> = (0..self.length).filter(|c| !pivots.contains(c)).collect();
        if free.is_empty() {
            return Err(Error::invalid("dual of the full space is the zero code"));
        }
        let basis: Vec<Vec<Elem>> = free
            .iter()
            .map(|&fc| {
                let mut v = vec![0; self.length];
                v[fc] = 1;
                for (row, &pc) in rref.iter().zip(&pivots) {
                    v[pc] = f.neg(row[fc]);
                }
                v
            })
            .collect();
        LinearCode::new(f.clone(), basis)
    }

    /// Whether both codes have the same row space.
    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.field == other.field
            && row_reduce(&self.field, &self.generator) == row_reduce(&other.field, &other.generator)
    }
}

pub fn weight(word: &[Elem]) -> usize {
    word.iter().filter(|&&x| x != 0).count()
}

/// Codewords as vertices, `x ~ y` when `x − y` has weight `dist`.
///
/// Built as a Cayley graph: the neighbours of the word for message `m` are
/// the words for `m + s` with `s` ranging over messages of weight `dist`.
pub fn code_distance_graph(code: &LinearCode, dist: usize) -> Result<Graph> {
    code.check_size(GRAPH_LIMIT, "codeword graph")?;
    let f = code.field();
    let d = code.dimension();
    let weights = code.weights()?;
    let n = weights.len();
    let connection: Vec<Vec<Elem>> = (0..n as u64)
        .filter(|&i| dist > 0 && weights[i as usize] == dist)
        .map(|i| vector_from_index(f, d, i))
        .collect();
    let q = f.order() as u64;
    let mut g = Graph::new(n);
    for i in 0..n {
        let m = vector_from_index(f, d, i as u64);
        for s in &connection {
            let j = m
                .iter()
                .zip(s)
                .fold(0u64, |acc, (&a, &b)| acc * q + f.add(a, b) as u64) as usize;
            if i < j {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hamming_7_4() -> LinearCode {
        let f = FiniteField::of_order(2).unwrap();
        LinearCode::new(
            f,
            vec![
                vec![1, 0, 0, 0, 0, 1, 1],
                vec![0, 1, 0, 0, 1, 0, 1],
                vec![0, 0, 1, 0, 1, 1, 0],
                vec![0, 0, 0, 1, 1, 1, 1],
            ],
        )
        .unwrap()
    }

    #[test]
    fn hamming_code_weights() {
        let c = hamming_7_4();
        assert_eq!(c.weight_distribution().unwrap(), vec![1, 0, 0, 7, 7, 0, 0, 1]);
        assert_eq!(c.minimum_distance().unwrap(), 3);
        let d = c.dual().unwrap();
        assert_eq!(d.dimension(), 3);
        assert_eq!(d.weight_distribution().unwrap(), vec![1, 0, 0, 0, 7, 0, 0, 0]);
        assert!(d.dual().unwrap().same_code(&c));
    }

    #[test]
    fn rank_deficient_generator_rejected() {
        let f = FiniteField::of_order(3).unwrap();
        assert!(LinearCode::new(f.clone(), vec![vec![1, 2, 0], vec![2, 1, 0]]).is_err());
        assert!(LinearCode::new(f.clone(), vec![vec![1, 3, 0]]).is_err());
        let full = LinearCode::new(f, vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert!(full.dual().is_err());
    }

    #[test]
    fn distance_graph_is_regular() {
        let c = hamming_7_4();
        let g = code_distance_graph(&c, 3).unwrap();
        assert!((0..16).all(|v| g.degree(v) == 7));
        assert_eq!(code_distance_graph(&c, 0).unwrap().edge_count(), 0);
        // adjacency agrees with the direct definition
        let words = c.codewords().unwrap();
        for i in 0..16 {
            for j in 0..16 {
                let diff: Vec<u32> = words[i].iter().zip(&words[j]).map(|(a, b)| a ^ b).collect();
                assert_eq!(g.has_edge(i, j), i != j && weight(&diff) == 3);
            }
        }
    }
}
