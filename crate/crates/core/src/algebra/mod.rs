//! Finite fields, vector and projective spaces, and standard forms.

mod field;
mod forms;
mod numbers;
mod projective;

pub use field::{Elem, FiniteField, FIELD_LIMIT};
pub use forms::{irreducible_quadratic, FormKind, QuadraticForm};
pub use numbers::{binomial, exact_sqrt, is_prime, is_prime_power, prime_power};
pub use projective::{
    all_vectors, axpy, dot, projective_lines, projective_points, vector_from_index, vector_index,
    ProjectivePoint, POINT_LIMIT,
};
