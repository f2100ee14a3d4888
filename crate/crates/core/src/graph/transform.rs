use std::collections::VecDeque;

use super::Graph;
use crate::{Error, Result};

/// Same vertices; edges are exactly the non-edges of `g`.
pub fn complement(g: &Graph) -> Graph {
    let n = g.order();
    let mut h = g.clone();
    let words = g.words();
    for u in 0..n {
        let row = &mut h.rows[u * words..(u + 1) * words];
        for (wi, w) in row.iter_mut().enumerate() {
            *w = !*w;
            let lo = wi * 64;
            // clear bits past n and the diagonal
            if lo + 64 > n {
                let valid = n - lo;
                *w &= if valid == 64 { u64::MAX } else { (1u64 << valid) - 1 };
            }
            if u / 64 == wi {
                *w &= !(1u64 << (u % 64));
            }
        }
    }
    h
}

/// Seidel switching: toggles every pair with exactly one endpoint in `set`.
pub fn seidel_switch(g: &Graph, set: &[usize]) -> Result<Graph> {
    let n = g.order();
    let mut inside = vec![false; n];
    for &v in set {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        inside[v] = true;
    }
    let mut h = g.clone();
    for u in (0..n).filter(|&u| inside[u]) {
        for v in (0..n).filter(|&v| !inside[v]) {
            h.toggle_edge(u, v);
        }
    }
    Ok(h)
}

fn bfs_distances(g: &Graph, source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.order()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap_or(0);
        for v in g.neighbours(u) {
            if dist[v].is_none() {
                dist[v] = Some(d + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Graph on the same vertices where `u ~ v` iff their distance in `g` lies in
/// `distances`. Requires a connected `g`.
pub fn distance_graph(g: &Graph, distances: &[usize]) -> Result<Graph> {
    if distances.is_empty() || distances.contains(&0) {
        return Err(Error::invalid("distances must be a nonempty set of positive integers"));
    }
    let n = g.order();
    let mut h = Graph::new(n);
    for u in 0..n {
        let dist = bfs_distances(g, u);
        for v in (u + 1)..n {
            match dist[v] {
                None => return Err(Error::Disconnected),
                Some(d) if distances.contains(&d) => h.add_edge(u, v),
                Some(_) => {}
            }
        }
    }
    if let Some(labels) = g.labels() {
        h = h.with_labels(labels.to_vec());
    }
    Ok(h)
}

pub fn delete_vertex(g: &Graph, v: usize) -> Result<Graph> {
    let n = g.order();
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    let keep: Vec<usize> = (0..n).filter(|&u| u != v).collect();
    Ok(g.induced(&keep))
}

/// Switches `g` with respect to the neighbourhood of `v` (isolating `v`) and
/// deletes `v`.
///
/// When the switching class of `g` is a regular two-graph the result is
/// strongly regular; callers verify that with the oracle.
pub fn descendant(g: &Graph, v: usize) -> Result<Graph> {
    let n = g.order();
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    let nbhd: Vec<usize> = g.neighbours(v).collect();
    let switched = seidel_switch(g, &nbhd)?;
    debug_assert_eq!(switched.degree(v), 0);
    delete_vertex(&switched, v)
}

/// Appends `count` isolated vertices after the existing ones.
pub fn union_with_isolated(g: &Graph, count: usize) -> Graph {
    let n = g.order();
    let mut h = Graph::new(n + count);
    for (u, v) in g.edges() {
        h.add_edge(u, v);
    }
    if let Some(labels) = g.labels() {
        let mut labels = labels.to_vec();
        labels.extend((0..count).map(|i| format!("isolated{i}")));
        h = h.with_labels(labels);
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::feasibility::SrgParams;
    use crate::graph::fixtures::{path, petersen};
    use crate::graph::is_strongly_regular;

    #[test]
    fn complement_involution_and_params() {
        let g = petersen();
        assert_eq!(complement(&complement(&g)), g);
        assert_eq!(
            is_strongly_regular(&complement(&g)),
            Some(SrgParams { n: 10, k: 6, lambda: 3, mu: 4 })
        );
        assert_eq!(complement(&Graph::new(4)), Graph::complete(4));
        // word boundary
        let big = Graph::new(70);
        let c = complement(&big);
        assert!(c.is_well_formed());
        assert_eq!(c.edge_count(), 70 * 69 / 2);
    }

    #[test]
    fn switching_identities() {
        let g = petersen();
        let s = [0, 3, 7];
        assert_eq!(seidel_switch(&seidel_switch(&g, &s).unwrap(), &s).unwrap(), g);
        assert_eq!(seidel_switch(&g, &[]).unwrap(), g);
        let all: Vec<usize> = (0..10).collect();
        assert_eq!(seidel_switch(&g, &all).unwrap(), g);
        assert!(seidel_switch(&g, &[10]).is_err());
    }

    #[test]
    fn switching_k4_isolates_vertex() {
        let h = seidel_switch(&Graph::complete(4), &[0]).unwrap();
        let mut degrees: Vec<usize> = (0..4).map(|v| h.degree(v)).collect();
        degrees.sort();
        assert_eq!(degrees, vec![0, 2, 2, 2]);
        assert!(h.has_edge(1, 2) && h.has_edge(2, 3) && h.has_edge(1, 3));
    }

    #[test]
    fn distance_one_is_identity() {
        let g = petersen();
        assert_eq!(distance_graph(&g, &[1]).unwrap(), g);
        // diameter 2: distance {1,2} gives K10
        assert_eq!(distance_graph(&g, &[1, 2]).unwrap(), Graph::complete(10));
    }

    #[test]
    fn distance_graph_rejects_disconnected() {
        let g = union_with_isolated(&path(3), 1);
        assert!(matches!(distance_graph(&g, &[1]), Err(Error::Disconnected)));
        assert!(distance_graph(&path(3), &[]).is_err());
        assert!(distance_graph(&path(3), &[0]).is_err());
    }

    #[test]
    fn descendant_of_isolated_vertex_union() {
        let g = petersen();
        let h = union_with_isolated(&g, 1);
        assert_eq!(descendant(&h, 10).unwrap(), g);
    }

    #[test]
    fn union_with_isolated_cases() {
        let k3 = Graph::complete(3);
        let h = union_with_isolated(&k3, 1);
        assert_eq!((h.order(), h.edge_count()), (4, 3));
        assert_eq!(union_with_isolated(&k3, 0), k3);
        assert_eq!(union_with_isolated(&Graph::new(0), 5), Graph::new(5));
    }
}
