use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Parameters `(n, k, λ, μ)` of a strongly regular graph.
///
/// Fields are public so that arbitrary (possibly invalid) tuples can be
/// written down and screened; [`SrgParams::new`] is the validating
/// constructor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SrgParams {
    pub n: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

/// Largest vertex count accepted by [`SrgParams::new`]. Keeps every exact
/// computation on these parameters inside `i128`.
pub const MAX_VERTICES: u64 = 1 << 20;

impl SrgParams {
    /// Validates `0 < k < n − 1`, `λ < k`, `μ ≤ k` and `k(k − λ − 1) = (n − k − 1)μ`.
    pub fn new(n: u64, k: u64, lambda: u64, mu: u64) -> Result<Self> {
        let p = SrgParams { n, k, lambda, mu };
        if n > MAX_VERTICES {
            return Err(Error::SizeLimit {
                what: "vertex count".into(),
                size: n as u128,
                limit: MAX_VERTICES as u128,
            });
        }
        if let Some(problem) = p.identity_violation() {
            return Err(Error::invalid(format!("{p}: {problem}")));
        }
        Ok(p)
    }

    /// Describes the first violated basic condition, if any.
    pub fn identity_violation(&self) -> Option<String> {
        let SrgParams { n, k, lambda, mu } = *self;
        if k == 0 || k.saturating_add(1) >= n {
            return Some(format!("degree {k} outside 0 < k < n - 1 = {}", n.saturating_sub(1)));
        }
        if lambda >= k {
            return Some(format!("lambda = {lambda} must be below k = {k}"));
        }
        if mu > k {
            return Some(format!("mu = {mu} exceeds k = {k}"));
        }
        let lhs = k as u128 * (k - lambda - 1) as u128;
        let rhs = (n - k - 1) as u128 * mu as u128;
        if lhs != rhs {
            return Some(format!(
                "k(k - lambda - 1) = {lhs} differs from (n - k - 1)mu = {rhs}"
            ));
        }
        None
    }

    pub fn satisfies_identity(&self) -> bool {
        self.identity_violation().is_none()
    }

    /// `0 < μ < k`: connected with connected complement.
    pub fn is_primitive(&self) -> bool {
        self.mu > 0 && self.mu < self.k
    }

    /// Disjoint union of cliques (`μ = 0`) or complete multipartite (`μ = k`).
    pub fn is_degenerate(&self) -> bool {
        !self.is_primitive()
    }

    /// `2k + (n − 1)(λ − μ) = 0`, the case where eigenvalues may be irrational.
    pub fn is_conference(&self) -> bool {
        let lhs = 2 * self.k as i128 + (self.n as i128 - 1) * (self.lambda as i128 - self.mu as i128);
        lhs == 0
    }

    /// Parameters of the complementary graph, `(n, n−k−1, n−2k+μ−2, n−2k+λ)`.
    pub fn complement(&self) -> Result<SrgParams> {
        let (n, k, l, m) = (
            self.n as i128,
            self.k as i128,
            self.lambda as i128,
            self.mu as i128,
        );
        let kc = n - k - 1;
        let lc = n - 2 * k + m - 2;
        let mc = n - 2 * k + l;
        if kc <= 0 || kc >= n - 1 || lc < 0 || mc < 0 {
            return Err(Error::invalid(format!("{self} has no valid complement")));
        }
        Ok(SrgParams {
            n: self.n,
            k: kc as u64,
            lambda: lc as u64,
            mu: mc as u64,
        })
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.n, self.k, self.lambda, self.mu)
    }
}

/// `k(k − λ − 1)/(n − k − 1)` when that is an integer.
pub fn derive_mu(n: u64, k: u64, lambda: u64) -> Option<u64> {
    if k == 0 || k.checked_add(1)? >= n || lambda >= k {
        return None;
    }
    let num = k as u128 * (k - lambda - 1) as u128;
    let den = (n - k - 1) as u128;
    num.is_multiple_of(den).then(|| (num / den) as u64)
}

/// Complement parameters; see [`SrgParams::complement`].
pub fn complement_params(p: &SrgParams) -> Result<SrgParams> {
    p.complement()
}
