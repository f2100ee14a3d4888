//! Polar space graphs and affine polar graphs.

use crate::algebra::{all_vectors, vector_index, FiniteField, FormKind, QuadraticForm};
use crate::graph::Graph;
use crate::{Error, Result, SrgParams};

/// Witt index and the `e` exponent (`0` hyperbolic, `1` parabolic and
/// symplectic, `2` elliptic) of the standard form.
fn rank_and_e(kind: FormKind, dim: usize) -> (u32, u32) {
    match kind {
        FormKind::Plus => (dim as u32 / 2, 0),
        FormKind::Minus => (dim as u32 / 2 - 1, 2),
        FormKind::Parabolic => ((dim as u32 - 1) / 2, 1),
        FormKind::Symplectic => (dim as u32 / 2, 1),
    }
}

/// Parameters of the collinearity graph of a polar space of rank `r ≥ 2`:
///
/// `v = (q^r−1)(q^{r−1+e}+1)/(q−1)`, `k = q(q^{r−1}−1)(q^{r−2+e}+1)/(q−1)`,
/// `λ = q−1 + q²(q^{r−2}−1)(q^{r−3+e}+1)/(q−1)`, `μ = (q^{r−1}−1)(q^{r−2+e}+1)/(q−1)`.
pub fn polar_graph_params(kind: FormKind, dim: usize, q: u64) -> Option<SrgParams> {
    let odd = dim % 2 == 1;
    if odd != (kind == FormKind::Parabolic) || dim < 2 || !crate::algebra::is_prime_power(q) {
        return None;
    }
    let (r, e) = rank_and_e(kind, dim);
    if r < 2 {
        return None;
    }
    // every product below is at most q^(2r+e)
    (q as u128).checked_pow(2 * r + e)?;
    let (r, e) = (r as i64, e as i64);
    let q = q as u128;
    let pw = |x: i64| -> u128 { if x < 0 { 0 } else { q.pow(x as u32) } };
    let v = (pw(r) - 1) * (pw(r - 1 + e) + 1) / (q - 1);
    let k = q * (pw(r - 1) - 1) * (pw(r - 2 + e) + 1) / (q - 1);
    let tail = if r == 2 { 0 } else { q * q * (pw(r - 2) - 1) * (pw(r - 3 + e) + 1) / (q - 1) };
    let lambda = q - 1 + tail;
    let mu = (pw(r - 1) - 1) * (pw(r - 2 + e) + 1) / (q - 1);
    let conv = |x: u128| u64::try_from(x).ok();
    SrgParams::new(conv(v)?, conv(k)?, conv(lambda)?, conv(mu)?).ok()
}

/// Isotropic points of the standard form, adjacent when distinct and
/// orthogonal under the associated bilinear form.
pub fn polar_graph(kind: FormKind, dim: usize, q: u64) -> Result<Graph> {
    let f = FiniteField::of_order(q)?;
    let form = QuadraticForm::standard(kind, dim, &f)?;
    if rank_and_e(kind, dim).0 < 2 {
        return Err(Error::invalid(format!(
            "{kind} polar space in dimension {dim} has rank below 2; its graph has no edges"
        )));
    }
    let pts = form.isotropic_points()?;
    let g = Graph::from_fn_par(pts.len(), |i, j| form.bilinear(pts[i].coords(), pts[j].coords()) == 0);
    Ok(g)
}

/// Parameters of VO^ε_{2m}(q), `m ≥ 2`: `v = q^{2m}`,
/// `k = (q^{m−1}+ε)(q^m−ε)`, `λ = q(q^{m−1}−ε)(q^{m−2}+ε)+q−2`,
/// `μ = q^{m−1}(q^{m−1}+ε)`.
pub fn affine_polar_graph_params(plus: bool, two_m: usize, q: u64) -> Option<SrgParams> {
    if !two_m.is_multiple_of(2) || two_m < 4 || q < 2 {
        return None;
    }
    let m = (two_m / 2) as u32;
    let eps: i128 = if plus { 1 } else { -1 };
    let q = q as i128;
    let v = q.checked_pow(2 * m)?;
    let k = (q.pow(m - 1) + eps) * (q.pow(m) - eps);
    let lambda = q * (q.pow(m - 1) - eps) * (q.pow(m - 2) + eps) + q - 2;
    let mu = q.pow(m - 1) * (q.pow(m - 1) + eps);
    let conv = |x: i128| u64::try_from(x).ok();
    SrgParams::new(conv(v)?, conv(k)?, conv(lambda)?, conv(mu)?).ok()
}

/// VO^ε_{2m}(q): vectors of `F_q^{2m}` in lexicographic order, `x ~ y` when
/// `x ≠ y` and `Q(x − y) = 0` for the standard form of type ε.
pub fn affine_polar_graph(plus: bool, two_m: usize, q: u64) -> Result<Graph> {
    if two_m < 2 || !two_m.is_multiple_of(2) {
        return Err(Error::invalid(format!("affine polar graphs need even dimension, got {two_m}")));
    }
    let f = FiniteField::of_order(q)?;
    let kind = if plus { FormKind::Plus } else { FormKind::Minus };
    let form = QuadraticForm::standard(kind, two_m, &f)?;
    let vectors = all_vectors(&f, two_m)?;
    let isotropic: Vec<&Vec<u32>> = vectors
        .iter()
        .filter(|v| v.iter().any(|&c| c != 0) && form.evaluate(v) == 0)
        .collect();
    let mut g = Graph::new(vectors.len());
    // Cayley graph on the additive group with connection set `isotropic`
    for (i, x) in vectors.iter().enumerate() {
        for s in &isotropic {
            let y: Vec<u32> = x.iter().zip(s.iter()).map(|(&a, &b)| f.add(a, b)).collect();
            let j = vector_index(&f, &y) as usize;
            if i < j {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}
