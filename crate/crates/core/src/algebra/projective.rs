//! Vectors, projective points and lines over a finite field.

use std::collections::HashMap;

use super::field::{Elem, FiniteField};
use crate::{Error, Result};

/// Cap on the number of vectors or points materialized at once.
pub const POINT_LIMIT: u64 = 1 << 22;

/// A projective point with its first nonzero coordinate equal to 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint(Vec<Elem>);

impl ProjectivePoint {
    /// Normalizes a nonzero vector; `None` for the zero vector.
    pub fn new(f: &FiniteField, mut coords: Vec<Elem>) -> Option<Self> {
        let lead = *coords.iter().find(|&&c| c != 0)?;
        let inv = f.inv(lead)?;
        for c in coords.iter_mut() {
            *c = f.mul(*c, inv);
        }
        Some(ProjectivePoint(coords))
    }

    pub fn coords(&self) -> &[Elem] {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len() - 1
    }
}

fn checked_count(q: u64, dim: u32, what: &str) -> Result<u64> {
    let size = (q as u128).checked_pow(dim).unwrap_or(u128::MAX);
    if size > POINT_LIMIT as u128 {
        return Err(Error::SizeLimit {
            what: what.to_string(),
            size,
            limit: POINT_LIMIT as u128,
        });
    }
    Ok(size as u64)
}

/// Decodes `index` as a vector of length `dim`, coordinate 0 most significant.
pub fn vector_from_index(f: &FiniteField, dim: usize, mut index: u64) -> Vec<Elem> {
    let q = f.order() as u64;
    let mut v = vec![0; dim];
    for c in v.iter_mut().rev() {
        *c = (index % q) as Elem;
        index /= q;
    }
    v
}

pub fn vector_index(f: &FiniteField, v: &[Elem]) -> u64 {
    v.iter().fold(0u64, |acc, &c| acc * f.order() as u64 + c as u64)
}

/// All of `F_q^dim` in lexicographic order.
pub fn all_vectors(f: &FiniteField, dim: usize) -> Result<Vec<Vec<Elem>>> {
    let count = checked_count(f.order() as u64, dim as u32, "vector space")?;
    Ok((0..count).map(|i| vector_from_index(f, dim, i)).collect())
}

/// Points of PG(d, q) in lexicographic order of their normalized coordinates.
pub fn projective_points(f: &FiniteField, d: usize) -> Result<Vec<ProjectivePoint>> {
    if d == 0 {
        return Err(Error::invalid("projective dimension must be at least 1"));
    }
    let count = checked_count(f.order() as u64, d as u32 + 1, "projective space")?;
    Ok((0..count)
        .map(|i| vector_from_index(f, d + 1, i))
        .filter(|v| v.iter().find(|&&c| c != 0) == Some(&1))
        .map(ProjectivePoint)
        .collect())
}

pub fn dot(f: &FiniteField, x: &[Elem], y: &[Elem]) -> Elem {
    x.iter().zip(y).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
}

/// `a·x + y` coordinatewise.
pub fn axpy(f: &FiniteField, a: Elem, x: &[Elem], y: &[Elem]) -> Vec<Elem> {
    x.iter().zip(y).map(|(&u, &v)| f.add(f.mul(a, u), v)).collect()
}

/// Lines of PG(d, q) as sorted lists of indices into `points`, ordered by
/// their two smallest point indices.
pub fn projective_lines(f: &FiniteField, points: &[ProjectivePoint]) -> Vec<Vec<usize>> {
    let index: HashMap<&[Elem], usize> =
        points.iter().enumerate().map(|(i, p)| (p.coords(), i)).collect();
    let mut lines = Vec::new();
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            let (x, y) = (points[i].coords(), points[j].coords());
            let mut line = vec![i];
            for a in f.elements() {
                let v = axpy(f, a, y, x);
                let p = ProjectivePoint::new(f, v).expect("distinct points span a line");
                line.push(index[p.coords()]);
            }
            // x + a y covers every point except y itself
            line.push(j);
            line.sort_unstable();
            line.dedup();
            if line[0] == i && line[1] == j {
                lines.push(line);
            }
        }
    }
    lines
}
