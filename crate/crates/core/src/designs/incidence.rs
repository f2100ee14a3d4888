//! Block designs and the graphs on their blocks.

use crate::algebra::{projective_lines, projective_points, FiniteField};
use crate::codes::golay_binary_23;
use crate::graph::Graph;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DesignKind {
    /// 2-(v, k, λ) design, verified at construction.
    Bibd { k: usize, lambda: usize },
    /// Point-block geometry with no balance guarantee.
    Geometry,
}

/// Points `0..v` and a list of blocks, each a sorted list of points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceStructure {
    v: usize,
    blocks: Vec<Vec<usize>>,
    kind: DesignKind,
}

impl IncidenceStructure {
    /// Unverified structure; blocks are sorted internally.
    pub fn geometry(v: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        for b in blocks.iter_mut() {
            b.sort_unstable();
            b.dedup();
            if let Some(&p) = b.last() {
                if p >= v {
                    return Err(Error::invalid(format!("block point {p} outside 0..{v}")));
                }
            }
        }
        Ok(IncidenceStructure {
            v,
            blocks,
            kind: DesignKind::Geometry,
        })
    }

    /// Checks that `blocks` form a 2-design and tags it as one.
    pub fn bibd(v: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut s = Self::geometry(v, blocks)?;
        let (k, lambda) = s.balance().ok_or_else(|| {
            Error::verification("blocks are not all the same size or pairs are not balanced")
        })?;
        s.kind = DesignKind::Bibd { k, lambda };
        Ok(s)
    }

    /// `(k, λ)` if every block has size `k` and every pair of points lies in
    /// exactly `λ` blocks.
    pub fn balance(&self) -> Option<(usize, usize)> {
        let k = self.blocks.first()?.len();
        if self.blocks.iter().any(|b| b.len() != k) || self.v < 2 {
            return None;
        }
        let v = self.v;
        let mut pairs = vec![0usize; v * v];
        for b in &self.blocks {
            for (i, &x) in b.iter().enumerate() {
                for &y in &b[i + 1..] {
                    pairs[x * v + y] += 1;
                }
            }
        }
        let lambda = pairs[1];
        (0..v)
            .all(|x| (x + 1..v).all(|y| pairs[x * v + y] == lambda))
            .then_some((k, lambda))
    }

    pub fn points(&self) -> usize {
        self.v
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn kind(&self) -> DesignKind {
        self.kind
    }

    /// Blocks containing none of `removed`, with the surviving points
    /// relabelled `0..v−|removed|` in order.
    pub fn blocks_avoiding(&self, removed: &[usize]) -> Result<IncidenceStructure> {
        let mut relabel = vec![None; self.v];
        let mut next = 0;
        for (p, slot) in relabel.iter_mut().enumerate() {
            if !removed.contains(&p) {
                *slot = Some(next);
                next += 1;
            }
        }
        let blocks = self
            .blocks
            .iter()
            .filter_map(|b| b.iter().map(|&p| relabel[p]).collect::<Option<Vec<_>>>())
            .collect();
        Self::geometry(next, blocks)
    }
}

/// Points and lines of PG(2, q): a 2-(q²+q+1, q+1, 1) design.
pub fn projective_plane(q: u64) -> Result<IncidenceStructure> {
    projective_space_lines(2, q)
}

/// Points and lines of PG(d, q), a 2-((q^{d+1}−1)/(q−1), q+1, 1) design.
pub fn projective_space_lines(d: usize, q: u64) -> Result<IncidenceStructure> {
    let f = FiniteField::of_order(q)?;
    let pts = projective_points(&f, d)?;
    let lines = projective_lines(&f, &pts);
    IncidenceStructure::bibd(pts.len(), lines)
}

/// Bose's Steiner triple system on `v = 3m` points, `m` odd.
///
/// Points are `(x, i)` in `Z_m × Z_3`, numbered `3x + i`. Blocks are
/// `{(x,0),(x,1),(x,2)}` and `{(x,i),(y,i),(x∘y,i+1)}` for `x < y`, where
/// `x∘y = (x+y)(m+1)/2 mod m` is the idempotent commutative quasigroup.
pub fn steiner_triple_system(v: usize) -> Result<IncidenceStructure> {
    if v % 6 != 3 {
        return Err(Error::unsupported(format!(
            "Steiner triple systems only for v = 3 (mod 6); got {v}"
        )));
    }
    let m = v / 3;
    let half = m.div_ceil(2);
    let pt = |x: usize, i: usize| 3 * x + i % 3;
    let mut blocks = Vec::new();
    for x in 0..m {
        blocks.push(vec![pt(x, 0), pt(x, 1), pt(x, 2)]);
    }
    for i in 0..3 {
        for x in 0..m {
            for y in (x + 1)..m {
                let z = (x + y) * half % m;
                blocks.push(vec![pt(x, i), pt(y, i), pt(z, i + 1)]);
            }
        }
    }
    let d = IncidenceStructure::bibd(v, blocks)?;
    match d.kind() {
        DesignKind::Bibd { k: 3, lambda: 1 } => Ok(d),
        other => Err(Error::verification(format!("Bose construction gave {other:?}"))),
    }
}

/// Supports of the weight-7 words of the binary Golay code: the 2-(23,7,21)
/// design, blocks in lexicographic order.
pub fn witt_design_23() -> Result<IncidenceStructure> {
    let code = golay_binary_23()?;
    let mut blocks: Vec<Vec<usize>> = code
        .codewords()?
        .into_iter()
        .filter(|w| w.iter().filter(|&&c| c != 0).count() == 7)
        .map(|w| (0..23).filter(|&i| w[i] != 0).collect())
        .collect();
    blocks.sort();
    let d = IncidenceStructure::bibd(23, blocks)?;
    match d.kind() {
        DesignKind::Bibd { k: 7, lambda: 21 } => Ok(d),
        other => Err(Error::verification(format!("weight-7 Golay words gave {other:?}"))),
    }
}

fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}

/// Blocks as vertices, adjacent when they meet in a number of points from `sizes`.
pub fn block_intersection_graph(d: &IncidenceStructure, sizes: &[usize]) -> Graph {
    let blocks = d.blocks();
    Graph::from_fn_par(blocks.len(), |i, j| {
        sizes.contains(&intersection_size(&blocks[i], &blocks[j]))
    })
}

/// Block graph of a 2-(v, K, 1) design: blocks adjacent when they meet.
pub fn steiner_graph(d: &IncidenceStructure) -> Result<Graph> {
    match d.kind() {
        DesignKind::Bibd { lambda: 1, .. } => {}
        other => return Err(Error::invalid(format!("need a Steiner system, got {other:?}"))),
    }
    let g = block_intersection_graph(d, &[1]);
    let b = g.order();
    if g.edge_count() == b * (b.saturating_sub(1)) / 2 {
        return Err(Error::NotStronglyRegular(
            "every two blocks meet, so the block graph is complete".into(),
        ));
    }
    Ok(g)
}

/// `(b, K(r−1), r−2+(K−1)², K²)` for a 2-(v, K, 1) design with `r = (v−1)/(K−1)`.
pub fn steiner_graph_params(v: u64, block: u64) -> Option<crate::SrgParams> {
    if block < 2 || !(v - 1).is_multiple_of(block - 1) {
        return None;
    }
    let r = (v - 1) / (block - 1);
    if !(v * r).is_multiple_of(block) {
        return None;
    }
    let b = v * r / block;
    let k = block * (r - 1);
    let lambda = (r + (block - 1) * (block - 1)).checked_sub(2)?;
    crate::SrgParams::new(b, k, lambda, block * block).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_strongly_regular;
    use crate::SrgParams;

    #[test]
    fn projective_planes() {
        let fano = projective_plane(2).unwrap();
        assert_eq!((fano.points(), fano.blocks().len()), (7, 7));
        let p3 = projective_plane(3).unwrap();
        assert_eq!((p3.points(), p3.blocks().len()), (13, 13));
        assert_eq!(p3.kind(), DesignKind::Bibd { k: 4, lambda: 1 });
        assert!(matches!(projective_plane(6), Err(Error::NotPrimePower(6))));
        assert!(steiner_graph(&p3).is_err());
    }

    #[test]
    fn bose_systems() {
        assert_eq!(steiner_triple_system(9).unwrap().blocks().len(), 12);
        assert_eq!(steiner_triple_system(15).unwrap().blocks().len(), 35);
        assert_eq!(steiner_triple_system(21).unwrap().blocks().len(), 70);
        assert!(matches!(steiner_triple_system(13), Err(Error::Unsupported(_))));
    }

    #[test]
    fn steiner_graphs_match_formula() {
        let g = steiner_graph(&steiner_triple_system(15).unwrap()).unwrap();
        assert_eq!(is_strongly_regular(&g), Some(SrgParams { n: 35, k: 18, lambda: 9, mu: 9 }));
        assert_eq!(steiner_graph_params(15, 3), Some(SrgParams { n: 35, k: 18, lambda: 9, mu: 9 }));
        let g9 = steiner_graph(&steiner_triple_system(9).unwrap()).unwrap();
        let p9 = is_strongly_regular(&g9).unwrap();
        assert_eq!(p9, SrgParams { n: 12, k: 9, lambda: 6, mu: 9 });
        assert!(p9.is_degenerate());
        // lines of PG(3,2) are a 2-(15,3,1) design
        let g = steiner_graph(&projective_space_lines(3, 2).unwrap()).unwrap();
        assert_eq!(is_strongly_regular(&g), steiner_graph_params(15, 3));
    }

    #[test]
    fn unbalanced_blocks_rejected() {
        assert!(IncidenceStructure::bibd(4, vec![vec![0, 1], vec![2, 3]]).is_err());
        assert!(IncidenceStructure::geometry(3, vec![vec![0, 3]]).is_err());
    }

    #[test]
    fn avoiding_points_relabels() {
        let fano = projective_plane(2).unwrap();
        let d = fano.blocks_avoiding(&[0]).unwrap();
        assert_eq!(d.points(), 6);
        assert_eq!(d.blocks().len(), 4);
        assert!(d.blocks().iter().flatten().all(|&p| p < 6));
    }
}
