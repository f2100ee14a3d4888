use rayon::prelude::*;

use super::Graph;
use crate::feasibility::SrgParams;

/// Measures `(n, k, λ, μ)` by brute force, or returns `None` if `g` is not
/// strongly regular.
///
/// Regularity is checked first, then every unordered pair is inspected with
/// a popcount of the two adjacency rows. No spectral reasoning is involved.
/// Disjoint unions of cliques (`μ = 0`) and complete multipartite graphs
/// (`μ = k`) are accepted; use [`SrgParams::is_primitive`] to tell them apart.
pub fn is_strongly_regular(g: &Graph) -> Option<SrgParams> {
    let n = g.order();
    if n < 2 {
        return None;
    }
    let k = g.degree(0);
    if k == 0 || k + 1 >= n || (1..n).any(|v| g.degree(v) != k) {
        return None;
    }

    // Per row: Some((lambda, mu)) with None marking "not yet seen".
    #[derive(Clone, Copy)]
    struct Seen {
        lambda: Option<usize>,
        mu: Option<usize>,
        ok: bool,
    }
    fn merge(a: Seen, b: Seen) -> Seen {
        let pick = |x: Option<usize>, y: Option<usize>, ok: &mut bool| match (x, y) {
            (Some(p), Some(q)) => {
                if p != q {
                    *ok = false;
                }
                Some(p)
            }
            (p, q) => p.or(q),
        };
        let mut ok = a.ok && b.ok;
        let lambda = pick(a.lambda, b.lambda, &mut ok);
        let mu = pick(a.mu, b.mu, &mut ok);
        Seen { lambda, mu, ok }
    }
    let empty = Seen {
        lambda: None,
        mu: None,
        ok: true,
    };

    let seen = (0..n)
        .into_par_iter()
        .map(|u| {
            let mut s = empty;
            for v in (u + 1)..n {
                let c = g.common_neighbours(u, v);
                let slot = if g.has_edge(u, v) { &mut s.lambda } else { &mut s.mu };
                match *slot {
                    None => *slot = Some(c),
                    Some(prev) if prev != c => {
                        s.ok = false;
                        return s;
                    }
                    _ => {}
                }
            }
            s
        })
        .reduce(|| empty, merge);

    if !seen.ok {
        return None;
    }
    Some(SrgParams {
        n: n as u64,
        k: k as u64,
        lambda: seen.lambda? as u64,
        mu: seen.mu? as u64,
    })
}

/// Rechecks `A² = kI + λA + μ(J − I − A)` entrywise.
///
/// `A²` is accumulated walk by walk over adjacency lists rather than by
/// row popcounts, so this is an independent route from
/// [`is_strongly_regular`].
pub fn matrix_identity_holds(g: &Graph, p: &SrgParams) -> bool {
    let n = g.order();
    if n as u64 != p.n {
        return false;
    }
    let adjacency: Vec<Vec<usize>> = (0..n).map(|u| g.neighbours(u).collect()).collect();
    (0..n).into_par_iter().all(|u| {
        let mut walks = vec![0u64; n];
        for &v in &adjacency[u] {
            for &w in &adjacency[v] {
                walks[w] += 1;
            }
        }
        (0..n).all(|w| {
            let expected = if w == u {
                p.k
            } else if g.has_edge(u, w) {
                p.lambda
            } else {
                p.mu
            };
            walks[w] == expected
        })
    })
}

/// Parameters together with the outcome of both verification routes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SrgCertificate {
    pub params: SrgParams,
    pub verified: bool,
}

impl SrgCertificate {
    /// Certifies `g` against `claimed`: `verified` is true only when the
    /// oracle measures exactly `claimed` and the matrix identity holds.
    pub fn check(g: &Graph, claimed: SrgParams) -> Self {
        let verified =
            is_strongly_regular(g) == Some(claimed) && matrix_identity_holds(g, &claimed);
        SrgCertificate {
            params: claimed,
            verified,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::{path, petersen};

    fn params(n: u64, k: u64, lambda: u64, mu: u64) -> SrgParams {
        SrgParams { n, k, lambda, mu }
    }

    /// Counts common neighbours with nested loops over the adjacency predicate.
    fn naive(g: &Graph) -> Option<SrgParams> {
        let n = g.order();
        let k = (0..n).filter(|&v| g.has_edge(0, v)).count();
        let (mut lam, mut mu) = (None, None);
        for u in 0..n {
            if (0..n).filter(|&v| g.has_edge(u, v)).count() != k {
                return None;
            }
            for v in (u + 1)..n {
                let c = (0..n).filter(|&w| g.has_edge(u, w) && g.has_edge(v, w)).count();
                let slot = if g.has_edge(u, v) { &mut lam } else { &mut mu };
                if slot.is_some_and(|x| x != c) {
                    return None;
                }
                *slot = Some(c);
            }
        }
        if k == 0 || k + 1 >= n {
            return None;
        }
        Some(params(n as u64, k as u64, lam? as u64, mu? as u64))
    }

    #[test]
    fn petersen_is_srg() {
        let g = petersen();
        assert_eq!(naive(&g), Some(params(10, 3, 0, 1)));
        assert_eq!(is_strongly_regular(&g), Some(params(10, 3, 0, 1)));
        assert!(matrix_identity_holds(&g, &params(10, 3, 0, 1)));
        assert!(SrgCertificate::check(&g, params(10, 3, 0, 1)).verified);
        assert!(!SrgCertificate::check(&g, params(10, 3, 0, 2)).verified);
    }

    #[test]
    fn complete_graph_excluded() {
        assert_eq!(is_strongly_regular(&Graph::complete(5)), None);
    }

    #[test]
    fn degenerate_cases_reported() {
        // 2K3: union of cliques
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(is_strongly_regular(&g), Some(params(6, 2, 1, 0)));
    }

    #[test]
    fn path_is_not_srg() {
        assert_eq!(is_strongly_regular(&path(4)), None);
        assert_eq!(is_strongly_regular(&Graph::new(1)), None);
    }

    #[test]
    fn identity_fails_for_wrong_params() {
        assert!(!matrix_identity_holds(&petersen(), &params(10, 3, 1, 1)));
    }
}
