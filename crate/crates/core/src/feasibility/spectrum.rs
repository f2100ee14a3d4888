use std::cmp::Ordering;

use super::surd::{QuadSurd, Rational};
use super::SrgParams;

/// Restricted eigenvalues `r > s` of a strongly regular graph and their
/// multiplicities `f`, `g`, all exact.
///
/// Multiplicities are kept as surds so that non-integral values can be
/// reported rather than rounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Spectrum {
    pub r: QuadSurd,
    pub s: QuadSurd,
    pub f: QuadSurd,
    pub g: QuadSurd,
}

impl Spectrum {
    /// `(f, g)` when both multiplicities are non-negative integers.
    pub fn integral_multiplicities(&self) -> Option<(i128, i128)> {
        let f = self.f.as_integer()?;
        let g = self.g.as_integer()?;
        (f >= 0 && g >= 0).then_some((f, g))
    }
}

/// Computes `r, s = ((λ−μ) ± √Δ)/2` with `Δ = (λ−μ)² + 4(k−μ)` and
/// `f, g = ((n−1) ∓ (2k + (n−1)(λ−μ))/√Δ)/2`.
///
/// Returns `None` when `Δ ≤ 0`, which cannot happen for tuples passing the
/// basic conditions of [`SrgParams::new`].
pub fn spectrum(p: &SrgParams) -> Option<Spectrum> {
    let n = p.n as i128;
    let k = p.k as i128;
    let lm = p.lambda as i128 - p.mu as i128;
    let delta = lm * lm + 4 * (k - p.mu as i128);
    if delta <= 0 {
        return None;
    }
    let root = QuadSurd::sqrt(delta);
    let half = Rational::from_integer(2);
    let r = (QuadSurd::integer(lm) + root).div_rational(half);
    let s = (QuadSurd::integer(lm) - root).div_rational(half);
    let skew = QuadSurd::integer(2 * k + (n - 1) * lm).div(root);
    let f = (QuadSurd::integer(n - 1) - skew).div_rational(half);
    let g = (QuadSurd::integer(n - 1) + skew).div_rational(half);
    debug_assert_eq!(r.partial_cmp(&s), Some(Ordering::Greater));
    Some(Spectrum { r, s, f, g })
}
