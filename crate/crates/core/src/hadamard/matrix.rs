use std::fmt;

use rayon::prelude::*;

use crate::algebra::{prime_power, FiniteField};
use crate::{Error, Result};

/// Largest order accepted by the constructors; verification is cubic.
pub const MATRIX_LIMIT: usize = 2048;

/// A square matrix with entries in {−1, 0, +1}, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PmOneMatrix {
    order: usize,
    entries: Vec<i8>,
}

impl PmOneMatrix {
    pub fn from_rows(rows: Vec<Vec<i8>>) -> Result<Self> {
        let order = rows.len();
        if order > MATRIX_LIMIT {
            return Err(Error::SizeLimit {
                what: "matrix order".into(),
                size: order as u128,
                limit: MATRIX_LIMIT as u128,
            });
        }
        if rows.iter().any(|r| r.len() != order) {
            return Err(Error::invalid("matrix rows must all have length equal to the order"));
        }
        if rows.iter().flatten().any(|&x| !(-1..=1).contains(&x)) {
            return Err(Error::invalid("entries must be -1, 0 or +1"));
        }
        Ok(PmOneMatrix {
            order,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub(crate) fn from_fn(order: usize, f: impl Fn(usize, usize) -> i8) -> Self {
        let entries = (0..order * order).map(|i| f(i / order, i % order)).collect();
        PmOneMatrix { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[i8] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.order, |i, j| self.get(j, i))
    }

    pub fn negate(&self) -> Self {
        Self::from_fn(self.order, |i, j| -self.get(i, j))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn row_sum(&self, i: usize) -> i64 {
        self.row(i).iter().map(|&x| x as i64).sum()
    }

    /// Whether `M Mᵀ = c I`, checked row pair by row pair in parallel.
    pub fn gram_is_scalar(&self, c: i64) -> bool {
        (0..self.order).into_par_iter().all(|i| {
            let ri = self.row(i);
            (i..self.order).all(|j| {
                let dot: i64 = ri.iter().zip(self.row(j)).map(|(&a, &b)| (a * b) as i64).sum();
                dot == if i == j { c } else { 0 }
            })
        })
    }

    /// `M Mᵀ = mI` with all entries ±1.
    pub fn is_hadamard(&self) -> bool {
        self.entries.iter().all(|&x| x != 0) && self.gram_is_scalar(self.order as i64)
    }

    /// Symmetric, zero diagonal, ±1 elsewhere, `C Cᵀ = (m−1) I`.
    pub fn is_symmetric_conference(&self) -> bool {
        let m = self.order;
        (0..m).all(|i| (0..m).all(|j| (self.get(i, j) == 0) == (i == j)))
            && self.is_symmetric()
            && self.gram_is_scalar(m as i64 - 1)
    }

    /// `M + Mᵀ = 2I`.
    pub fn is_skew_type(&self) -> bool {
        (0..self.order).all(|i| {
            (0..self.order).all(|j| self.get(i, j) + self.get(j, i) == if i == j { 2 } else { 0 })
        })
    }

    pub fn kronecker(&self, other: &PmOneMatrix) -> Result<PmOneMatrix> {
        let (a, b) = (self.order, other.order);
        let order = a * b;
        if order > MATRIX_LIMIT {
            return Err(Error::SizeLimit {
                what: "matrix order".into(),
                size: order as u128,
                limit: MATRIX_LIMIT as u128,
            });
        }
        Ok(Self::from_fn(order, |i, j| self.get(i / b, j / b) * other.get(i % b, j % b)))
    }

    /// Order on the first line, then one row per line using `+`, `-` and `0`.
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.order);
        for i in 0..self.order {
            s.extend(self.row(i).iter().map(|&x| match x {
                1 => '+',
                -1 => '-',
                _ => '0',
            }));
            s.push('\n');
        }
        s
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let err = |line: usize, reason: String| Error::Parse {
            source_name: "matrix".into(),
            line,
            reason,
        };
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, first) = lines.next().ok_or_else(|| err(1, "missing order line".into()))?;
        let order: usize = first
            .trim()
            .parse()
            .map_err(|_| err(1, format!("`{}` is not an order", first.trim())))?;
        let mut rows = Vec::with_capacity(order);
        for (i, line) in lines {
            let row = line
                .trim()
                .chars()
                .map(|c| match c {
                    '+' => Ok(1),
                    '-' => Ok(-1),
                    '0' => Ok(0),
                    other => Err(err(i + 1, format!("unexpected character `{other}`"))),
                })
                .collect::<Result<Vec<i8>>>()?;
            if row.len() != order {
                return Err(err(i + 1, format!("row has {} entries, expected {order}", row.len())));
            }
            rows.push(row);
        }
        if rows.len() != order {
            return Err(err(0, format!("expected {order} rows, found {}", rows.len())));
        }
        Self::from_rows(rows)
    }
}

impl fmt::Debug for PmOneMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn verified(m: PmOneMatrix, ok: bool, what: &str) -> Result<PmOneMatrix> {
    if ok {
        Ok(m)
    } else {
        Err(Error::verification(format!("{what} failed its product check")))
    }
}

fn sylvester_core() -> PmOneMatrix {
    PmOneMatrix::from_fn(2, |i, j| if i & j == 1 { -1 } else { 1 })
}

/// Hadamard matrix of order `2^e` by repeated Kronecker products.
pub fn hadamard_sylvester(e: u32) -> Result<PmOneMatrix> {
    if (1usize << e.min(63)) > MATRIX_LIMIT {
        return Err(Error::SizeLimit {
            what: "Sylvester order".into(),
            size: 1u128 << e.min(127),
            limit: MATRIX_LIMIT as u128,
        });
    }
    let mut h = PmOneMatrix::from_fn(1, |_, _| 1);
    for _ in 0..e {
        h = h.kronecker(&sylvester_core())?;
    }
    let ok = h.is_hadamard();
    verified(h, ok, "Sylvester matrix")
}

/// The bordered Jacobsthal matrix: index 0 is the border, index `1 + x`
/// the field element `x`, and entry `(x, y)` is `χ(x − y)`.
fn bordered_jacobsthal(q: u64, border_col: i8) -> Result<PmOneMatrix> {
    let f = FiniteField::of_order(q)?;
    let order = q as usize + 1;
    if order > MATRIX_LIMIT {
        return Err(Error::SizeLimit {
            what: "matrix order".into(),
            size: order as u128,
            limit: MATRIX_LIMIT as u128,
        });
    }
    Ok(PmOneMatrix::from_fn(order, |i, j| match (i, j) {
        (0, 0) => 0,
        (0, _) => 1,
        (_, 0) => border_col,
        _ => f.chi(f.sub(i as u32 - 1, j as u32 - 1)) as i8,
    }))
}

fn require_residue(q: u64, r: u64) -> Result<()> {
    prime_power(q).ok_or(Error::NotPrimePower(q))?;
    if q % 4 != r {
        return Err(Error::invalid(format!("need q = {r} (mod 4), got {q}")));
    }
    Ok(())
}

/// Skew-type Hadamard matrix `I + S` of order `q + 1`, `q ≡ 3 (mod 4)`.
pub fn hadamard_paley_i(q: u64) -> Result<PmOneMatrix> {
    require_residue(q, 3)?;
    let s = bordered_jacobsthal(q, -1)?;
    let h = PmOneMatrix::from_fn(s.order(), |i, j| if i == j { 1 } else { s.get(i, j) });
    let ok = h.is_hadamard() && h.is_skew_type();
    verified(h, ok, "Paley I matrix")
}

/// Symmetric conference matrix of order `q + 1`, `q ≡ 1 (mod 4)`.
pub fn conference_paley(q: u64) -> Result<PmOneMatrix> {
    require_residue(q, 1)?;
    let c = bordered_jacobsthal(q, 1)?;
    let ok = c.is_symmetric_conference();
    verified(c, ok, "Paley conference matrix")
}

/// Hadamard matrix of order `2(q + 1)`, `q ≡ 1 (mod 4)`: each entry of the
/// conference matrix becomes a 2×2 block, zeros becoming `[[1,−1],[−1,−1]]`.
pub fn hadamard_paley_ii(q: u64) -> Result<PmOneMatrix> {
    let c = conference_paley(q)?;
    let m = 2 * c.order();
    if m > MATRIX_LIMIT {
        return Err(Error::SizeLimit {
            what: "matrix order".into(),
            size: m as u128,
            limit: MATRIX_LIMIT as u128,
        });
    }
    let h = PmOneMatrix::from_fn(m, |i, j| {
        let (a, b) = (i % 2, j % 2);
        match c.get(i / 2, j / 2) {
            0 => if a == 0 && b == 0 { 1 } else { -1 },
            x => if a == 1 && b == 1 { -x } else { x },
        }
    });
    let ok = h.is_hadamard();
    verified(h, ok, "Paley II matrix")
}
