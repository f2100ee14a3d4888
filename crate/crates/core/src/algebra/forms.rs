//! Standard quadratic and alternating forms.

use std::fmt;

use super::field::{Elem, FiniteField};
use super::projective::{projective_points, ProjectivePoint};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormKind {
    /// Hyperbolic quadric, even dimension.
    Plus,
    /// Elliptic quadric, even dimension.
    Minus,
    /// Parabolic quadric, odd dimension.
    Parabolic,
    /// Alternating bilinear form, even dimension.
    Symplectic,
}

impl fmt::Display for FormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormKind::Plus => "plus",
            FormKind::Minus => "minus",
            FormKind::Parabolic => "parabolic",
            FormKind::Symplectic => "symplectic",
        })
    }
}

/// `Q(x) = Σ_{i ≤ j} c_ij x_i x_j`, or an alternating bilinear form.
#[derive(Debug, Clone)]
pub struct QuadraticForm {
    field: FiniteField,
    kind: FormKind,
    dim: usize,
    /// upper-triangular coefficients, row-major `dim × dim`
    coeffs: Vec<Elem>,
}

/// First `(a, b)` (by `a`, then `b`) with `t² + a t + b` irreducible.
pub fn irreducible_quadratic(f: &FiniteField) -> (Elem, Elem) {
    for a in f.elements() {
        for b in f.elements() {
            let has_root = f
                .elements()
                .any(|t| f.add(f.add(f.mul(t, t), f.mul(a, t)), b) == 0);
            if !has_root {
                return (a, b);
            }
        }
    }
    unreachable!("every finite field has an irreducible quadratic")
}

impl QuadraticForm {
    /// The canonical form of the given kind:
    /// plus `Σ x_{2i} x_{2i+1}`; minus replaces the last pair by an
    /// irreducible `x² + a x y + b y²`; parabolic `x_0² + Σ x_{2i−1} x_{2i}`;
    /// symplectic `Σ (x_{2i} y_{2i+1} − x_{2i+1} y_{2i})`.
    pub fn standard(kind: FormKind, dim: usize, f: &FiniteField) -> Result<Self> {
        let even = dim.is_multiple_of(2);
        let ok = match kind {
            FormKind::Plus | FormKind::Minus | FormKind::Symplectic => even && dim >= 2,
            FormKind::Parabolic => !even && dim >= 3,
        };
        if !ok {
            return Err(Error::invalid(format!("{kind} form cannot have dimension {dim}")));
        }
        let mut form = QuadraticForm {
            field: f.clone(),
            kind,
            dim,
            coeffs: vec![0; dim * dim],
        };
        match kind {
            FormKind::Plus | FormKind::Symplectic => {
                for i in (0..dim).step_by(2) {
                    form.set(i, i + 1, 1);
                }
            }
            FormKind::Minus => {
                for i in (0..dim - 2).step_by(2) {
                    form.set(i, i + 1, 1);
                }
                let (a, b) = irreducible_quadratic(f);
                let i = dim - 2;
                form.set(i, i, 1);
                form.set(i, i + 1, a);
                form.set(i + 1, i + 1, b);
            }
            FormKind::Parabolic => {
                form.set(0, 0, 1);
                for i in (1..dim).step_by(2) {
                    form.set(i, i + 1, 1);
                }
            }
        }
        Ok(form)
    }

    fn set(&mut self, i: usize, j: usize, c: Elem) {
        self.coeffs[i * self.dim + j] = c;
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    /// `Q(x)`; identically zero for the symplectic kind.
    pub fn evaluate(&self, x: &[Elem]) -> Elem {
        if self.kind == FormKind::Symplectic {
            return 0;
        }
        let f = &self.field;
        let mut acc = 0;
        for i in 0..self.dim {
            if x[i] == 0 {
                continue;
            }
            for j in i..self.dim {
                let c = self.coeffs[i * self.dim + j];
                if c != 0 && x[j] != 0 {
                    acc = f.add(acc, f.mul(c, f.mul(x[i], x[j])));
                }
            }
        }
        acc
    }

    /// Associated bilinear form: `Q(x+y) − Q(x) − Q(y)`, or the alternating
    /// form itself for the symplectic kind.
    pub fn bilinear(&self, x: &[Elem], y: &[Elem]) -> Elem {
        let f = &self.field;
        let mut acc = 0;
        for i in 0..self.dim {
            for j in i..self.dim {
                let c = self.coeffs[i * self.dim + j];
                if c == 0 {
                    continue;
                }
                let term = if i == j {
                    if self.kind == FormKind::Symplectic {
                        0
                    } else {
                        f.mul(f.from_int(2), f.mul(x[i], y[i]))
                    }
                } else if self.kind == FormKind::Symplectic {
                    f.sub(f.mul(x[i], y[j]), f.mul(x[j], y[i]))
                } else {
                    f.add(f.mul(x[i], y[j]), f.mul(x[j], y[i]))
                };
                acc = f.add(acc, f.mul(c, term));
            }
        }
        acc
    }

    /// Projective points with `Q(x) = 0`; all points for the symplectic kind.
    pub fn isotropic_points(&self) -> Result<Vec<ProjectivePoint>> {
        Ok(projective_points(&self.field, self.dim - 1)?
            .into_iter()
            .filter(|p| self.evaluate(p.coords()) == 0)
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::projective::all_vectors;

    fn count(kind: FormKind, dim: usize, q: u64) -> usize {
        let f = FiniteField::of_order(q).unwrap();
        QuadraticForm::standard(kind, dim, &f).unwrap().isotropic_points().unwrap().len()
    }

    #[test]
    fn isotropic_point_counts() {
        assert_eq!(count(FormKind::Plus, 4, 2), 9);
        assert_eq!(count(FormKind::Minus, 4, 2), 5);
        assert_eq!(count(FormKind::Parabolic, 5, 3), 40);
        assert_eq!(count(FormKind::Symplectic, 4, 3), 40);
    }

    /// An independently chosen form of each type, e.g. the plus form written
    /// as `x0 x3 + x1 x2`, must have the same number of isotropic points.
    #[test]
    fn counts_agree_with_alternative_forms() {
        for q in [2u64, 3, 4, 5] {
            let f = FiniteField::of_order(q).unwrap();
            let vs = all_vectors(&f, 4).unwrap();
            let alt_plus = vs
                .iter()
                .filter(|v| v.iter().any(|&c| c != 0))
                .filter(|v| f.add(f.mul(v[0], v[3]), f.mul(v[1], v[2])) == 0)
                .count();
            assert_eq!(alt_plus / (q as usize - 1), count(FormKind::Plus, 4, q));
            // elliptic form with the anisotropic pair moved to the front
            let (a, b) = irreducible_quadratic(&f);
            let alt_minus = vs
                .iter()
                .filter(|v| v.iter().any(|&c| c != 0))
                .filter(|v| {
                    let n = f.add(f.add(f.mul(v[0], v[0]), f.mul(a, f.mul(v[0], v[1]))), f.mul(b, f.mul(v[1], v[1])));
                    f.add(n, f.mul(v[2], v[3])) == 0
                })
                .count();
            assert_eq!(alt_minus / (q as usize - 1), count(FormKind::Minus, 4, q));
        }
    }

    #[test]
    fn bilinear_properties() {
        let f = FiniteField::of_order(3).unwrap();
        let vs = all_vectors(&f, 4).unwrap();
        for kind in [FormKind::Plus, FormKind::Minus, FormKind::Symplectic] {
            let form = QuadraticForm::standard(kind, 4, &f).unwrap();
            for x in vs.iter().step_by(7) {
                for y in vs.iter().step_by(5) {
                    let b = form.bilinear(x, y);
                    if kind == FormKind::Symplectic {
                        assert_eq!(b, f.neg(form.bilinear(y, x)));
                    } else {
                        assert_eq!(b, form.bilinear(y, x));
                        let s: Vec<Elem> = x.iter().zip(y).map(|(&a, &c)| f.add(a, c)).collect();
                        let polar = f.sub(f.sub(form.evaluate(&s), form.evaluate(x)), form.evaluate(y));
                        assert_eq!(b, polar);
                    }
                }
                if kind == FormKind::Symplectic {
                    assert_eq!(form.bilinear(x, x), 0);
                }
            }
        }
    }

    #[test]
    fn parity_checked() {
        let f = FiniteField::of_order(2).unwrap();
        assert!(QuadraticForm::standard(FormKind::Plus, 5, &f).is_err());
        assert!(QuadraticForm::standard(FormKind::Parabolic, 4, &f).is_err());
        assert!(QuadraticForm::standard(FormKind::Symplectic, 3, &f).is_err());
    }
}
