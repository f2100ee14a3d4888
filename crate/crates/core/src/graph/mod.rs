//! Dense bit-matrix graphs, the strong-regularity oracle, and graph transforms.
//!
//! Every construction in this crate produces a [`Graph`]: an undirected simple
//! graph whose adjacency matrix is stored as `n` rows of packed `u64` words.
//! Common-neighbour counts are then a popcount of two ANDed rows, which keeps
//! brute-force verification of graphs on ~1300 vertices well under a second.

mod io;
mod oracle;
mod transform;

pub use io::{decode_graph6, encode_graph6, parse_edge_list, write_edge_list};
pub use oracle::{is_strongly_regular, matrix_identity_holds, SrgCertificate};
pub use transform::{
    complement, delete_vertex, descendant, distance_graph, seidel_switch, union_with_isolated,
};

use std::fmt;

const WORD: usize = 64;

/// Undirected simple graph with a symmetric, loop-free bit-matrix adjacency.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(WORD);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
            labels: None,
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 0..n {
            for j in (i + 1)..n {
                g.add_edge(i, j);
            }
        }
        g
    }

    /// Builds a graph from a symmetric predicate evaluated on every pair `i < j`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::new(n);
        for i in 0..n {
            for j in (i + 1)..n {
                if adjacent(i, j) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Parallel variant of [`Graph::from_fn`]; rows are filled independently so
    /// the result does not depend on scheduling.
    pub fn from_fn_par(n: usize, adjacent: impl Fn(usize, usize) -> bool + Sync) -> Self {
        use rayon::prelude::*;
        let words = n.div_ceil(WORD);
        let mut rows = vec![0u64; n * words];
        if words > 0 {
            rows.par_chunks_mut(words).enumerate().for_each(|(i, row)| {
                for j in 0..n {
                    if i != j && adjacent(i.min(j), i.max(j)) {
                        row[j / WORD] |= 1 << (j % WORD);
                    }
                }
            });
        }
        Graph {
            n,
            words,
            rows,
            labels: None,
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> crate::Result<Self> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(crate::Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(crate::Error::invalid(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loops are not allowed");
        self.set(u, v, true);
        self.set(v, u, true);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.set(u, v, false);
        self.set(v, u, false);
    }

    pub(crate) fn toggle_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.rows[u * self.words + v / WORD] ^= 1 << (v % WORD);
        self.rows[v * self.words + u / WORD] ^= 1 << (u % WORD);
    }

    #[inline]
    fn set(&mut self, u: usize, v: usize, on: bool) {
        let w = &mut self.rows[u * self.words + v / WORD];
        if on {
            *w |= 1 << (v % WORD);
        } else {
            *w &= !(1 << (v % WORD));
        }
    }

    /// Packed adjacency row of `u`.
    #[inline]
    pub fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Number of common neighbours of `u` and `v`.
    #[inline]
    pub fn common_neighbours(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn neighbours(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(u).iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * WORD + b)
            })
        })
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbours(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Attaches per-vertex provenance labels; ignored by equality.
    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = Some(labels);
        self
    }

    /// Subgraph induced on `keep`, in the given order.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut g = Graph::new(keep.len());
        for (a, &u) in keep.iter().enumerate() {
            for (b, &v) in keep.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(a, b);
                }
            }
        }
        if let Some(labels) = &self.labels {
            g.labels = Some(keep.iter().map(|&u| labels[u].clone()).collect());
        }
        g
    }

    /// Checks symmetry and the zero diagonal.
    pub fn is_well_formed(&self) -> bool {
        (0..self.n).all(|u| !self.has_edge(u, u))
            && (0..self.n).all(|u| self.neighbours(u).all(|v| v < self.n && self.has_edge(v, u)))
    }

    pub(crate) fn words(&self) -> usize {
        self.words
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rows == other.rows
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph {{ n: {}, edges: {} }}", self.n, self.edge_count())
    }
}
