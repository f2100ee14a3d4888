//! Exact arithmetic in GF(p^e).
//!
//! Elements are `u32` codes: the coefficient vector `c_0 + c_1 x + ...` of the
//! residue polynomial read as the base-`p` number `Σ c_i p^i`. Field sums act
//! on coefficient vectors; products and inverses go through exp/log tables
//! built once from schoolbook polynomial multiplication modulo the modulus.

use std::fmt;
use std::sync::Arc;

use super::numbers::{is_prime, prime_power};
use crate::{Error, Result};

/// Default cap on the field order.
pub const FIELD_LIMIT: u64 = 1 << 20;

/// A field element, stored as its base-`p` coefficient code.
pub type Elem = u32;

struct Tables {
    p: u32,
    e: u32,
    q: u32,
    /// monic modulus coefficients `m_0..m_e` (with `m_e = 1`)
    modulus: Vec<u32>,
    add: Vec<u32>,
    neg: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    primitive: u32,
}

/// GF(p^e) with a fixed modulus. Cloning is cheap; tables are shared.
#[derive(Clone)]
pub struct FiniteField {
    t: Arc<Tables>,
}

fn digits(mut code: u32, p: u32, e: u32) -> Vec<u32> {
    (0..e)
        .map(|_| {
            let d = code % p;
            code /= p;
            d
        })
        .collect()
}

fn pack(coeffs: &[u32], p: u32) -> u32 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Multiplies two residues (coefficient vectors of length `e`) modulo the
/// monic `modulus`.
fn poly_mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let e = modulus.len() - 1;
    let mut prod = vec![0u64; 2 * e.max(1)];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    for deg in (e..prod.len()).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        // subtract c * x^(deg-e) * modulus
        for (i, &m) in modulus.iter().enumerate() {
            let idx = deg - e + i;
            prod[idx] = (prod[idx] + (p as u64 - c) * m as u64) % p as u64;
        }
    }
    prod[..e].iter().map(|&c| c as u32).collect()
}

/// Remainder of `a` modulo `b` over GF(p); both given low-degree first,
/// `b` with a nonzero leading coefficient.
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    let db = b.len() - 1;
    let lead_inv = mod_inverse(b[db], p) as u64;
    while r.len() > db {
        let top = *r.last().unwrap();
        if top != 0 {
            let f = top * lead_inv % p as u64;
            let shift = r.len() - 1 - db;
            for (i, &c) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + (p as u64 - f) * c as u64 % p as u64) % p as u64;
            }
        }
        r.pop();
    }
    r.into_iter().map(|c| c as u32).collect()
}

fn mod_inverse(a: u32, p: u32) -> u32 {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, a as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    t.rem_euclid(p as i64) as u32
}

/// Trial division by every monic polynomial of degree `1..=e/2`.
fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let e = modulus.len() - 1;
    for d in 1..=e / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut div = digits(code as u32, p, d as u32);
            div.push(1);
            if poly_rem(modulus, &div, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest monic irreducible of degree `e`: lower
/// coefficients are enumerated as base-`p` numbers with `c_{e-1}` most
/// significant, starting from zero.
fn smallest_irreducible(p: u32, e: u32) -> Vec<u32> {
    let count = (p as u64).pow(e);
    for code in 0..count {
        let mut m = digits(code as u32, p, e);
        m.push(1);
        if is_irreducible(&m, p) {
            return m;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl FiniteField {
    /// GF(p^e) with the smallest irreducible modulus and the default size cap.
    pub fn new(p: u64, e: u32) -> Result<Self> {
        Self::with_limit(p, e, FIELD_LIMIT)
    }

    pub fn with_limit(p: u64, e: u32, limit: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::invalid("extension degree must be at least 1"));
        }
        let q = (p as u128).checked_pow(e).unwrap_or(u128::MAX);
        if q > limit as u128 {
            return Err(Error::SizeLimit {
                what: format!("GF({p}^{e})"),
                size: q,
                limit: limit as u128,
            });
        }
        let (p, q) = (p as u32, q as u32);
        let modulus = if e == 1 { vec![0, 1] } else { smallest_irreducible(p, e) };

        let mut add = vec![0u32; 0];
        let mut neg = vec![0u32; q as usize];
        let dig: Vec<Vec<u32>> = (0..q).map(|c| digits(c, p, e)).collect();
        for (c, d) in dig.iter().enumerate() {
            let nd: Vec<u32> = d.iter().map(|&x| (p - x) % p).collect();
            neg[c] = pack(&nd, p);
        }
        // full addition table only for small fields; larger fields add digitwise
        if q <= 4096 {
            add = vec![0u32; (q * q) as usize];
            for a in 0..q as usize {
                for b in 0..q as usize {
                    let s: Vec<u32> = dig[a].iter().zip(&dig[b]).map(|(x, y)| (x + y) % p).collect();
                    add[a * q as usize + b] = pack(&s, p);
                }
            }
        }

        let mut t = Tables {
            p,
            e,
            q,
            modulus,
            add,
            neg,
            exp: Vec::new(),
            log: Vec::new(),
            primitive: 0,
        };
        t.primitive = find_primitive(&t, &dig);
        let (exp, log) = power_tables(&t, t.primitive);
        t.exp = exp;
        t.log = log;
        Ok(FiniteField { t: Arc::new(t) })
    }

    /// GF(q) for a prime power `q`.
    pub fn of_order(q: u64) -> Result<Self> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::new(p, e)
    }

    pub fn characteristic(&self) -> u32 {
        self.t.p
    }

    pub fn degree(&self) -> u32 {
        self.t.e
    }

    pub fn order(&self) -> u32 {
        self.t.q
    }

    /// Monic modulus, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.t.modulus
    }

    /// The multiplicative generator used for the log tables.
    pub fn primitive_element(&self) -> Elem {
        self.t.primitive
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.t.q
    }

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn one(&self) -> Elem {
        1
    }

    /// Image of an integer under `Z → GF(p) ⊂ GF(q)`.
    pub fn from_int(&self, a: i64) -> Elem {
        a.rem_euclid(self.t.p as i64) as Elem
    }

    /// Coefficients `c_0..c_{e-1}` of `a`.
    pub fn coefficients(&self, a: Elem) -> Vec<u32> {
        digits(a, self.t.p, self.t.e)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let t = &*self.t;
        if !t.add.is_empty() {
            return t.add[(a * t.q + b) as usize];
        }
        if t.e == 1 {
            return (a + b) % t.p;
        }
        let (mut a, mut b, mut out, mut place) = (a, b, 0u32, 1u32);
        for _ in 0..t.e {
            out += ((a % t.p + b % t.p) % t.p) * place;
            a /= t.p;
            b /= t.p;
            place *= t.p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.t.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        let t = &*self.t;
        let s = t.log[a as usize] + t.log[b as usize];
        t.exp[(s % (t.q - 1)) as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a == 0 {
            return None;
        }
        let t = &*self.t;
        let l = t.log[a as usize];
        Some(t.exp[((t.q - 1 - l) % (t.q - 1)) as usize])
    }

    pub fn div(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, a: Elem, k: u64) -> Elem {
        if k == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let t = &*self.t;
        let l = t.log[a as usize] as u64 * (k % (t.q as u64 - 1)) % (t.q as u64 - 1);
        t.exp[l as usize]
    }

    /// Discrete log base the primitive element, for nonzero `a`.
    pub fn log(&self, a: Elem) -> Option<u32> {
        (a != 0).then(|| self.t.log[a as usize])
    }

    /// `g^i` for the primitive element `g`.
    pub fn exp(&self, i: u64) -> Elem {
        self.t.exp[(i % (self.t.q as u64 - 1)) as usize]
    }

    /// Nonzero squares.
    pub fn squares(&self) -> Vec<Elem> {
        let mut sq: Vec<Elem> = (1..self.t.q).map(|x| self.mul(x, x)).collect();
        sq.sort_unstable();
        sq.dedup();
        sq
    }

    pub fn is_square(&self, a: Elem) -> bool {
        a == 0 || self.t.p == 2 || self.t.log[a as usize].is_multiple_of(2)
    }

    /// Quadratic character: 0, 1 or −1 (odd characteristic only).
    pub fn chi(&self, a: Elem) -> i32 {
        if a == 0 {
            0
        } else if self.is_square(a) {
            1
        } else {
            -1
        }
    }

    /// Frobenius map `x ↦ x^p`.
    pub fn frobenius(&self, a: Elem) -> Elem {
        self.pow(a, self.t.p as u64)
    }
}

fn mul_slow(t: &Tables, dig: &[Vec<u32>], a: u32, b: u32) -> u32 {
    pack(&poly_mul_mod(&dig[a as usize], &dig[b as usize], &t.modulus, t.p), t.p)
}

fn find_primitive(t: &Tables, dig: &[Vec<u32>]) -> u32 {
    let order = t.q - 1;
    let factors = prime_factors(order);
    'cand: for g in 1..t.q {
        for &f in &factors {
            if pow_slow(t, dig, g, order / f) == 1 {
                continue 'cand;
            }
        }
        return g;
    }
    unreachable!("multiplicative group is cyclic")
}

fn pow_slow(t: &Tables, dig: &[Vec<u32>], mut base: u32, mut k: u32) -> u32 {
    let mut acc = 1;
    while k > 0 {
        if k & 1 == 1 {
            acc = mul_slow(t, dig, acc, base);
        }
        base = mul_slow(t, dig, base, base);
        k >>= 1;
    }
    acc
}

fn power_tables(t: &Tables, g: u32) -> (Vec<u32>, Vec<u32>) {
    let order = (t.q - 1) as usize;
    let mut exp = vec![0u32; order];
    let mut log = vec![0u32; t.q as usize];
    let gd = digits(g, t.p, t.e);
    let mut cur = digits(1, t.p, t.e);
    for (i, slot) in exp.iter_mut().enumerate() {
        let code = pack(&cur, t.p);
        *slot = code;
        log[code as usize] = i as u32;
        cur = poly_mul_mod(&cur, &gd, &t.modulus, t.p);
    }
    (exp, log)
}

fn prime_factors(mut m: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            out.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod {:?}", self.t.p, self.t.e, self.t.modulus)
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.t.p == other.t.p && self.t.e == other.t.e && self.t.modulus == other.t.modulus
    }
}

impl Eq for FiniteField {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf2_tables() {
        let f = FiniteField::new(2, 1).unwrap();
        assert_eq!(f.order(), 2);
        assert_eq!(f.add(1, 1), 0);
        assert_eq!(f.mul(1, 1), 1);
        assert_eq!(f.inv(0), None);
    }

    #[test]
    fn smallest_moduli() {
        assert_eq!(FiniteField::new(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(FiniteField::new(2, 2).unwrap().modulus(), &[1, 1, 1]);
        // x^3 + x + 1 beats x^3 + x^2 + 1
        assert_eq!(FiniteField::new(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
        // x^2 + 1 is reducible over GF(5); x^2 + 2 is the first irreducible
        assert_eq!(FiniteField::new(5, 2).unwrap().modulus(), &[2, 0, 1]);
    }

    #[test]
    fn rejects_bad_orders() {
        assert!(matches!(FiniteField::new(4, 1), Err(Error::NotPrime(4))));
        assert!(matches!(FiniteField::of_order(6), Err(Error::NotPrimePower(6))));
        assert!(matches!(FiniteField::new(2, 21), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn squares_of_small_fields() {
        assert_eq!(FiniteField::of_order(5).unwrap().squares(), vec![1, 4]);
        assert_eq!(
            FiniteField::of_order(13).unwrap().squares(),
            vec![1, 3, 4, 9, 10, 12]
        );
        assert_eq!(FiniteField::of_order(4).unwrap().squares(), vec![1, 2, 3]);
    }

    /// Arithmetic against a direct coefficient-vector model.
    #[test]
    fn agrees_with_polynomial_model() {
        for q in [4u64, 8, 9, 25, 27, 32, 49, 64] {
            let f = FiniteField::of_order(q).unwrap();
            let (p, e) = (f.characteristic(), f.degree());
            for a in f.elements() {
                for b in f.elements() {
                    let da = digits(a, p, e);
                    let db = digits(b, p, e);
                    let prod = pack(&poly_mul_mod(&da, &db, f.modulus(), p), p);
                    assert_eq!(f.mul(a, b), prod, "GF({q}) {a}*{b}");
                    let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                    assert_eq!(f.add(a, b), pack(&sum, p));
                }
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64] {
            let f = FiniteField::of_order(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.add(a, b), f.add(b, a));
                }
            }
            let g = f.primitive_element();
            let distinct: std::collections::HashSet<_> = (0..q - 1).map(|i| f.pow(g, i)).collect();
            assert_eq!(distinct.len() as u64, q - 1);
        }
    }

    #[test]
    fn large_field_without_addition_table() {
        let f = FiniteField::of_order(3u64.pow(9)).unwrap();
        let a = 12345;
        let b = 777;
        assert_eq!(f.sub(f.add(a, b), b), a);
        assert_eq!(f.mul(f.div(a, b).unwrap(), b), a);
        assert_eq!(f.frobenius(f.mul(a, b)), f.mul(f.frobenius(a), f.frobenius(b)));
    }
}
