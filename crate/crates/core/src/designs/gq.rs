//! Generalized quadrangles AS(q) and T2*(O), and their collinearity graphs.

use crate::algebra::{
    projective_lines, projective_points, vector_from_index, vector_index, Elem, FiniteField,
    ProjectivePoint,
};
use crate::graph::Graph;
use crate::{Error, Result, SrgParams};

/// Points `0..p` and lines of size `s + 1`, with `t + 1` lines per point and
/// the quadrangle axiom verified exhaustively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedQuadrangle {
    s: usize,
    t: usize,
    points: usize,
    lines: Vec<Vec<usize>>,
}

impl GeneralizedQuadrangle {
    pub fn new(s: usize, t: usize, points: usize, mut lines: Vec<Vec<usize>>) -> Result<Self> {
        for l in lines.iter_mut() {
            l.sort_unstable();
        }
        let gq = GeneralizedQuadrangle { s, t, points, lines };
        gq.verify()?;
        Ok(gq)
    }

    fn verify(&self) -> Result<()> {
        let (s, t) = (self.s, self.t);
        let fail = |m: String| Err(Error::verification(format!("GQ({s},{t}): {m}")));
        if self.points != (s + 1) * (s * t + 1) || self.lines.len() != (t + 1) * (s * t + 1) {
            return fail(format!("{} points and {} lines", self.points, self.lines.len()));
        }
        let mut on = vec![0usize; self.points];
        for l in &self.lines {
            if l.len() != s + 1 || l.windows(2).any(|w| w[0] == w[1]) {
                return fail("line of wrong size".into());
            }
            for &p in l {
                if p >= self.points {
                    return fail(format!("point {p} out of range"));
                }
                on[p] += 1;
            }
        }
        if on.iter().any(|&c| c != t + 1) {
            return fail("a point is not on t + 1 lines".into());
        }
        // collinearity, counting each pair at most once
        let mut col = Graph::new(self.points);
        for l in &self.lines {
            for (i, &x) in l.iter().enumerate() {
                for &y in &l[i + 1..] {
                    if col.has_edge(x, y) {
                        return fail(format!("points {x}, {y} share two lines"));
                    }
                    col.add_edge(x, y);
                }
            }
        }
        for l in &self.lines {
            let mut mask = vec![0u64; col.row(0).len()];
            for &x in l {
                mask[x / 64] |= 1 << (x % 64);
            }
            for p in 0..self.points {
                if l.binary_search(&p).is_ok() {
                    continue;
                }
                let meet: u32 = col.row(p).iter().zip(&mask).map(|(a, b)| (a & b).count_ones()).sum();
                if meet != 1 {
                    return fail(format!("point {p} is collinear with {meet} points of a line"));
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> (usize, usize) {
        (self.s, self.t)
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    /// Lines become points and points lines: a GQ(t, s).
    pub fn dual(&self) -> Result<GeneralizedQuadrangle> {
        let mut through = vec![Vec::new(); self.points];
        for (li, l) in self.lines.iter().enumerate() {
            for &p in l {
                through[p].push(li);
            }
        }
        GeneralizedQuadrangle::new(self.t, self.s, self.lines.len(), through)
    }

    /// Collinearity graph on the points.
    pub fn point_graph(&self) -> Graph {
        let mut g = Graph::new(self.points);
        for l in &self.lines {
            for (i, &x) in l.iter().enumerate() {
                for &y in &l[i + 1..] {
                    g.add_edge(x, y);
                }
            }
        }
        g
    }
}

/// `((s+1)(st+1), s(t+1), s−1, t+1)`.
pub fn gq_point_graph_params(s: u64, t: u64) -> Option<SrgParams> {
    SrgParams::new((s + 1) * (s * t + 1), s * (t + 1), s.checked_sub(1)?, t + 1).ok()
}

/// AS(q), a GQ(q−1, q+1) on the points of `F_q³`, `q` odd.
///
/// Lines are `{(σ, a, b)}`, `{(a, σ, b)}` and
/// `{(cσ² − bσ + a, −2cσ + b, σ)}` as `σ` runs over the field.
pub fn gq_ahrens_szekeres(q: u64) -> Result<GeneralizedQuadrangle> {
    let f = FiniteField::of_order(q)?;
    if f.characteristic() == 2 {
        return Err(Error::invalid(format!("AS(q) needs odd q, got {q}")));
    }
    let idx = |v: [Elem; 3]| vector_index(&f, &v) as usize;
    let two = f.from_int(2);
    let mut lines = Vec::new();
    for a in f.elements() {
        for b in f.elements() {
            lines.push(f.elements().map(|s| idx([s, a, b])).collect());
            lines.push(f.elements().map(|s| idx([a, s, b])).collect());
            for c in f.elements() {
                lines.push(
                    f.elements()
                        .map(|s| {
                            let x = f.add(f.sub(f.mul(c, f.mul(s, s)), f.mul(b, s)), a);
                            let y = f.add(f.neg(f.mul(two, f.mul(c, s))), b);
                            idx([x, y, s])
                        })
                        .collect(),
                );
            }
        }
    }
    let q = q as usize;
    GeneralizedQuadrangle::new(q - 1, q + 1, q * q * q, lines)
}

/// The regular hyperoval `{(1:t:t²)} ∪ {(0:1:0), (0:0:1)}` of PG(2, q), `q`
/// even, checked to meet every line in 0 or 2 points.
pub fn hyperoval(q: u64) -> Result<Vec<ProjectivePoint>> {
    let f = FiniteField::of_order(q)?;
    if f.characteristic() != 2 {
        return Err(Error::invalid(format!("hyperovals need even q, got {q}")));
    }
    let mut pts: Vec<ProjectivePoint> = f
        .elements()
        .map(|t| ProjectivePoint::new(&f, vec![1, t, f.mul(t, t)]).unwrap())
        .collect();
    pts.push(ProjectivePoint::new(&f, vec![0, 1, 0]).unwrap());
    pts.push(ProjectivePoint::new(&f, vec![0, 0, 1]).unwrap());
    verify_hyperoval(&f, &pts)?;
    Ok(pts)
}

fn verify_hyperoval(f: &FiniteField, oval: &[ProjectivePoint]) -> Result<()> {
    let q = f.order() as usize;
    if oval.len() != q + 2 || oval.iter().any(|p| p.dimension() != 2) {
        return Err(Error::verification(format!("a hyperoval of PG(2,{q}) has {} points", q + 2)));
    }
    let plane = projective_points(f, 2)?;
    let members: Vec<bool> = plane.iter().map(|p| oval.contains(p)).collect();
    for line in projective_lines(f, &plane) {
        let meet = line.iter().filter(|&&i| members[i]).count();
        if meet != 0 && meet != 2 {
            return Err(Error::verification(format!("a line meets the point set in {meet} points")));
        }
    }
    Ok(())
}

/// T2*(O): points are the affine points `(x, y, z, 1)` of PG(3, q), lines the
/// affine lines whose point at infinity `(o, 0)` lies on the hyperoval `O`.
/// A GQ(q−1, q+1).
pub fn gq_t2_star(q: u64, oval: &[ProjectivePoint]) -> Result<GeneralizedQuadrangle> {
    let f = FiniteField::of_order(q)?;
    if f.characteristic() != 2 {
        return Err(Error::invalid(format!("T2*(O) needs even q, got {q}")));
    }
    verify_hyperoval(&f, oval)?;
    let n = (q * q * q) as usize;
    let mut lines = Vec::new();
    for o in oval {
        let dir = o.coords();
        for a in 0..n {
            let base = vector_from_index(&f, 3, a as u64);
            let mut line: Vec<usize> = f
                .elements()
                .map(|t| {
                    let v: Vec<Elem> = base.iter().zip(dir).map(|(&x, &d)| f.add(x, f.mul(t, d))).collect();
                    vector_index(&f, &v) as usize
                })
                .collect();
            line.sort_unstable();
            if line[0] == a {
                lines.push(line);
            }
        }
    }
    let q = q as usize;
    GeneralizedQuadrangle::new(q - 1, q + 1, n, lines)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_strongly_regular;

    fn p(n: u64, k: u64, lambda: u64, mu: u64) -> SrgParams {
        SrgParams { n, k, lambda, mu }
    }

    #[test]
    fn ahrens_szekeres_small() {
        let gq = gq_ahrens_szekeres(3).unwrap();
        assert_eq!((gq.points(), gq.lines().len()), (27, 45));
        assert_eq!(is_strongly_regular(&gq.point_graph()), Some(p(27, 10, 1, 5)));
        assert_eq!(gq_point_graph_params(2, 4), Some(p(27, 10, 1, 5)));
        let gq5 = gq_ahrens_szekeres(5).unwrap();
        assert_eq!(is_strongly_regular(&gq5.point_graph()), Some(p(125, 28, 3, 7)));
        assert!(gq_ahrens_szekeres(4).is_err());
    }

    #[test]
    fn dual_of_as5() {
        let d = gq_ahrens_szekeres(5).unwrap().dual().unwrap();
        assert_eq!(d.order(), (6, 4));
        assert_eq!(is_strongly_regular(&d.point_graph()), Some(p(175, 30, 5, 5)));
    }

    #[test]
    fn dual_is_involution() {
        let gq = gq_ahrens_szekeres(3).unwrap();
        assert_eq!(gq.dual().unwrap().dual().unwrap(), gq);
    }

    #[test]
    fn hyperovals() {
        assert_eq!(hyperoval(2).unwrap().len(), 4);
        assert_eq!(hyperoval(4).unwrap().len(), 6);
        assert!(hyperoval(3).is_err());
        let f = FiniteField::of_order(4).unwrap();
        let mut bad = hyperoval(4).unwrap();
        bad[0] = ProjectivePoint::new(&f, vec![1, 1, 0]).unwrap();
        assert!(verify_hyperoval(&f, &bad).is_err());
    }

    #[test]
    fn t2_star_point_graphs() {
        let g2 = gq_t2_star(2, &hyperoval(2).unwrap()).unwrap().point_graph();
        let p2 = is_strongly_regular(&g2).unwrap();
        assert_eq!(p2, p(8, 4, 0, 4));
        assert!(p2.is_degenerate());
        let g4 = gq_t2_star(4, &hyperoval(4).unwrap()).unwrap().point_graph();
        assert_eq!(is_strongly_regular(&g4), Some(p(64, 18, 2, 6)));
    }

    #[test]
    fn broken_line_set_rejected() {
        let gq = gq_ahrens_szekeres(3).unwrap();
        let mut lines = gq.lines().to_vec();
        lines.swap_remove(0);
        assert!(GeneralizedQuadrangle::new(2, 4, 27, lines).is_err());
    }
}
