//! Parameter arithmetic and nonexistence screening.
//!
//! [`check_feasibility`] runs, in order, the counting identity, integrality of
//! the eigenvalue multiplicities, the two Krein conditions, the absolute
//! bound, and a lookup in the curated [`NonexistenceTable`]. The first failing
//! rule is reported; otherwise the verdict is [`FeasibilityVerdict::Unsettled`].
//!
//! The Krein conditions and the absolute bound are only applied to primitive
//! parameters (`0 < μ < k`). Disjoint unions of cliques violate the absolute
//! bound, and treating them as infeasible would contradict the oracle.

mod params;
mod spectrum;
pub mod surd;
mod table;

use std::cmp::Ordering;
use std::fmt;

use crate::algebra::exact_sqrt;

pub use params::{complement_params, derive_mu, SrgParams, MAX_VERTICES};
pub use spectrum::{spectrum, Spectrum};
pub use surd::QuadSurd;
pub use table::{NonexistenceTable, TableEntry, TABLE_FILE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    Identity,
    Integrality,
    Krein,
    AbsoluteBound,
    Table,
}

impl Rule {
    /// Machine-readable rule id.
    pub fn id(&self) -> &'static str {
        match self {
            Rule::Identity => "identity",
            Rule::Integrality => "integrality",
            Rule::Krein => "krein",
            Rule::AbsoluteBound => "absolute-bound",
            Rule::Table => "table",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reason {
    pub rule: Rule,
    pub detail: String,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.rule.id(), self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FeasibilityVerdict {
    Infeasible(Reason),
    Unsettled,
}

impl FeasibilityVerdict {
    pub fn is_infeasible(&self) -> bool {
        matches!(self, FeasibilityVerdict::Infeasible(_))
    }

    pub fn rule(&self) -> Option<Rule> {
        match self {
            FeasibilityVerdict::Infeasible(r) => Some(r.rule),
            FeasibilityVerdict::Unsettled => None,
        }
    }

    fn fail(rule: Rule, detail: String) -> Self {
        FeasibilityVerdict::Infeasible(Reason { rule, detail })
    }
}

/// Screens `p` against the builtin nonexistence table.
pub fn check_feasibility(p: &SrgParams) -> FeasibilityVerdict {
    check_feasibility_with(p, NonexistenceTable::builtin())
}

/// Runs only the arithmetic rules, skipping the table.
pub fn check_arithmetic(p: &SrgParams) -> FeasibilityVerdict {
    check_feasibility_with(p, &NonexistenceTable::default())
}

pub fn check_feasibility_with(p: &SrgParams, table: &NonexistenceTable) -> FeasibilityVerdict {
    if let Some(problem) = p.identity_violation() {
        return FeasibilityVerdict::fail(Rule::Identity, problem);
    }
    if p.n > MAX_VERTICES {
        // beyond the exact-arithmetic range only the table is consulted
        return table_verdict(p, table);
    }
    if let Some(detail) = multiplicity_screen(p) {
        return FeasibilityVerdict::fail(Rule::Integrality, detail);
    }
    let Some(sp) = spectrum(p) else {
        return FeasibilityVerdict::fail(Rule::Integrality, "negative discriminant".into());
    };
    let Some((f, g)) = sp.integral_multiplicities() else {
        return FeasibilityVerdict::fail(
            Rule::Integrality,
            format!("multiplicities f = {}, g = {} are not non-negative integers", sp.f, sp.g),
        );
    };
    if p.is_primitive() {
        if let Some(detail) = krein_violation(p, &sp) {
            return FeasibilityVerdict::fail(Rule::Krein, detail);
        }
        let n = p.n as i128;
        for (name, m) in [("f", f), ("g", g)] {
            if 2 * n > m * (m + 3) {
                return FeasibilityVerdict::fail(
                    Rule::AbsoluteBound,
                    format!("n = {n} exceeds {name}({name}+3)/2 = {}", m * (m + 3) / 2),
                );
            }
        }
    }
    table_verdict(p, table)
}

/// Integer-only version of the multiplicity test, for fast rejection.
///
/// With `Δ = (λ−μ)² + 4(k−μ)` and `N = 2k + (n−1)(λ−μ)`: if `Δ = d²` the
/// multiplicities are `((n−1)d ∓ N)/2d`; otherwise they are rational only
/// when `N = 0`, and then both equal `(n−1)/2`.
fn multiplicity_screen(p: &SrgParams) -> Option<String> {
    let n = p.n as i128;
    let lm = p.lambda as i128 - p.mu as i128;
    let delta = lm * lm + 4 * (p.k as i128 - p.mu as i128);
    if delta <= 0 {
        return Some("negative discriminant".into());
    }
    let num = 2 * p.k as i128 + (n - 1) * lm;
    let ok = match exact_sqrt(delta as u64) {
        Some(d) => {
            let d = d as i128;
            [(n - 1) * d - num, (n - 1) * d + num]
                .iter()
                .all(|&t| t >= 0 && t % (2 * d) == 0)
        }
        None => num == 0 && (n - 1) % 2 == 0,
    };
    (!ok).then(|| format!("multiplicities ((n-1) -+ {num}/sqrt({delta}))/2 are not non-negative integers"))
}

fn table_verdict(p: &SrgParams, table: &NonexistenceTable) -> FeasibilityVerdict {
    match table.lookup(p) {
        Some(entry) => FeasibilityVerdict::fail(Rule::Table, entry.citation.clone()),
        None => FeasibilityVerdict::Unsettled,
    }
}

fn krein_violation(p: &SrgParams, sp: &Spectrum) -> Option<String> {
    let k = QuadSurd::integer(p.k as i128);
    let one = QuadSurd::integer(1);
    let two = QuadSurd::integer(2);
    let (r, s) = (sp.r, sp.s);
    let checks = [
        (
            "(r+1)(k+r+2rs) <= (k+r)(s+1)^2",
            (r + one) * (k + r + two * r * s),
            (k + r) * (s + one) * (s + one),
        ),
        (
            "(s+1)(k+s+2rs) <= (k+s)(r+1)^2",
            (s + one) * (k + s + two * r * s),
            (k + s) * (r + one) * (r + one),
        ),
    ];
    checks.into_iter().find_map(|(name, lhs, rhs)| {
        ((lhs - rhs).signum() == Ordering::Greater)
            .then(|| format!("{name} fails with r = {r}, s = {s}"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u64, k: u64, lambda: u64, mu: u64) -> SrgParams {
        SrgParams { n, k, lambda, mu }
    }

    #[test]
    fn examples() {
        assert_eq!(check_feasibility(&p(10, 3, 1, 1)).rule(), Some(Rule::Identity));
        assert_eq!(check_feasibility(&p(57, 14, 1, 4)).rule(), Some(Rule::Table));
        assert_eq!(check_arithmetic(&p(57, 14, 1, 4)), FeasibilityVerdict::Unsettled);
        assert_eq!(check_feasibility(&p(3250, 57, 0, 1)), FeasibilityVerdict::Unsettled);
        assert_eq!(check_feasibility(&p(10, 3, 0, 1)), FeasibilityVerdict::Unsettled);
    }

    #[test]
    fn integrality_rejects_non_conference_surds() {
        // identity holds: 4*1 = 2*2, but f, g are irrational
        assert_eq!(check_feasibility(&p(7, 4, 2, 2)).rule(), Some(Rule::Integrality));
    }

    #[test]
    fn krein_rejects_known_case() {
        // (28,9,0,4) satisfies integrality (r=1, s=-5, f=21, g=6) but fails Krein
        let v = check_arithmetic(&p(28, 9, 0, 4));
        assert_eq!(v.rule(), Some(Rule::Krein), "{v:?}");
    }

    #[test]
    fn absolute_bound_rejects_known_case() {
        // (50,21,4,12): r=1, s=-9, f=42, g=7 passes Krein but 7*10/2 < 50
        let v = check_arithmetic(&p(50, 21, 4, 12));
        assert_eq!(v.rule(), Some(Rule::AbsoluteBound), "{v:?}");
        assert_eq!(check_arithmetic(&p(50, 28, 18, 12)).rule(), Some(Rule::AbsoluteBound));
    }

    #[test]
    fn degenerate_params_are_never_rejected() {
        for (m, a) in [(2, 3), (3, 2), (5, 4), (2, 10)] {
            // m disjoint copies of K_a and the complete multipartite complement
            let q = p(m * a, a - 1, a - 2, 0);
            assert_eq!(check_feasibility(&q), FeasibilityVerdict::Unsettled, "{q}");
            let c = q.complement().unwrap();
            assert_eq!(check_feasibility(&c), FeasibilityVerdict::Unsettled, "{c}");
        }
    }

    #[test]
    fn integer_screen_agrees_with_exact_spectrum() {
        for n in 4..=80u64 {
            for k in 1..n - 1 {
                for lambda in 0..k {
                    let Some(mu) = derive_mu(n, k, lambda).filter(|&m| m <= k) else { continue };
                    let q = p(n, k, lambda, mu);
                    let exact = spectrum(&q).and_then(|sp| sp.integral_multiplicities()).is_some();
                    assert_eq!(multiplicity_screen(&q).is_none(), exact, "{q}");
                }
            }
        }
    }
}
