use std::io::Write;

use rayon::prelude::*;

use super::{Existence, Registry};
use crate::feasibility::{FeasibilityVerdict, Rule};
use crate::{Error, Result, SrgParams};

/// Default upper bound on `max_n` for [`Registry::scan`].
pub const SCAN_LIMIT: u64 = 1300;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    pub params: SrgParams,
    pub existence: Existence,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ScanSummary {
    pub exists: usize,
    pub nonexistent: usize,
    pub unknown: usize,
}

impl ScanSummary {
    pub fn of(rows: &[ScanRow]) -> Self {
        let mut s = ScanSummary::default();
        for r in rows {
            match r.existence {
                Existence::Exists { .. } => s.exists += 1,
                Existence::Nonexistent(_) => s.nonexistent += 1,
                Existence::Unknown => s.unknown += 1,
            }
        }
        s
    }

    pub fn total(&self) -> usize {
        self.exists + self.nonexistent + self.unknown
    }
}

/// Tuples on `n` vertices that satisfy the counting identity, ordered by
/// `k` then `λ`. With `t = k − 1 − λ`, `μ = kt/(n − k − 1)` must be an
/// integer, so `t` steps through multiples of `(n−k−1)/gcd(k, n−k−1)`.
fn identity_tuples(n: u64) -> Vec<SrgParams> {
    let mut out = Vec::new();
    for k in 1..n.saturating_sub(1) {
        let d = n - k - 1;
        let step = d / gcd(k, d);
        let mut ts: Vec<u64> = (0..k).step_by(step as usize).collect();
        ts.reverse();
        for t in ts {
            let mu = k * t / d;
            if mu <= k {
                out.push(SrgParams { n, k, lambda: k - 1 - t, mu });
            }
        }
    }
    out
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Registry {
    /// Classifies every tuple with `4 ≤ n ≤ max_n` that passes the counting
    /// identity and integrality. Rows are ordered by `n`, then `k`, then `λ`.
    pub fn scan(&self, max_n: u64) -> Result<Vec<ScanRow>> {
        if max_n > SCAN_LIMIT {
            return Err(Error::SizeLimit {
                what: "scan range".into(),
                size: max_n as u128,
                limit: SCAN_LIMIT as u128,
            });
        }
        let per_n: Vec<Vec<ScanRow>> = (4..=max_n.max(3))
            .into_par_iter()
            .map(|n| {
                identity_tuples(n)
                    .into_iter()
                    .filter_map(|p| {
                        let existence = match self.feasibility(&p) {
                            FeasibilityVerdict::Infeasible(r)
                                if matches!(r.rule, Rule::Identity | Rule::Integrality) =>
                            {
                                return None
                            }
                            FeasibilityVerdict::Infeasible(r) => Existence::Nonexistent(r),
                            FeasibilityVerdict::Unsettled => match self.find(&p) {
                                Some(hit) => Existence::Exists {
                                    provenance: hit.provenance(p.n),
                                    entry: hit.entry,
                                },
                                None => Existence::Unknown,
                            },
                        };
                        Some(ScanRow { params: p, existence })
                    })
                    .collect()
            })
            .collect();
        Ok(per_n.into_iter().flatten().collect())
    }
}

/// CSV with header `n,k,lambda,mu,status,detail`.
pub fn write_scan_csv<W: Write>(rows: &[ScanRow], out: W) -> Result<()> {
    let io = |e: csv::Error| Error::Io {
        path: "<csv output>".into(),
        source: e.into(),
    };
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["n", "k", "lambda", "mu", "status", "detail"]).map_err(io)?;
    for r in rows {
        let p = r.params;
        w.write_record([
            p.n.to_string(),
            p.k.to_string(),
            p.lambda.to_string(),
            p.mu.to_string(),
            r.existence.status().to_string(),
            r.existence.detail(),
        ])
        .map_err(io)?;
    }
    w.flush().map_err(|source| Error::Io {
        path: "<csv output>".into(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_enumeration_is_complete() {
        for n in 4..=40u64 {
            let mut brute = Vec::new();
            for k in 1..n - 1 {
                for lambda in 0..k {
                    for mu in 0..=k {
                        let p = SrgParams { n, k, lambda, mu };
                        if p.satisfies_identity() {
                            brute.push(p);
                        }
                    }
                }
            }
            assert_eq!(identity_tuples(n), brute, "n = {n}");
        }
    }

    #[test]
    fn small_scan() {
        let reg = Registry::with_defaults();
        let rows = reg.scan(20).unwrap();
        let find = |p: SrgParams| rows.iter().find(|r| r.params == p).map(|r| r.existence.status());
        assert_eq!(find(SrgParams { n: 10, k: 3, lambda: 0, mu: 1 }), Some("exists"));
        assert_eq!(find(SrgParams { n: 10, k: 3, lambda: 1, mu: 1 }), None);
        let sorted = rows.windows(2).all(|w| {
            let (a, b) = (w[0].params, w[1].params);
            (a.n, a.k, a.lambda) < (b.n, b.k, b.lambda)
        });
        assert!(sorted);
        assert!(reg.scan(SCAN_LIMIT + 1).is_err());
    }

    #[test]
    fn csv_quotes_details() {
        let reg = Registry::with_defaults();
        let rows: Vec<ScanRow> = reg.scan(200).unwrap().into_iter().filter(|r| r.params.n == 175).collect();
        let mut buf = Vec::new();
        write_scan_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("n,k,lambda,mu,status,detail\n"));
        assert!(text.contains("175,30,5,5,exists,\"AS(5)*; GQ(6, 4): Graph on 175 vertices\""));
    }
}
