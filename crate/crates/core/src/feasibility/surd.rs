//! Exact arithmetic in Q(√d).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{Signed, Zero};

pub type Rational = Ratio<i128>;

/// `a + b√d` with rational `a`, `b` and square-free `d ≥ 1`.
///
/// Values with `d = 1` are normalized to `b = 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadSurd {
    a: Rational,
    b: Rational,
    d: i128,
}

/// Splits `m ≥ 0` as `c²·d` with `d` square-free.
pub fn square_part(m: i128) -> (i128, i128) {
    assert!(m >= 0);
    if m == 0 {
        return (0, 1);
    }
    let mut c = 1;
    let mut d = 1;
    let mut rest = m;
    let mut p = 2;
    while p * p <= rest {
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        c *= p.pow(e / 2);
        if e % 2 == 1 {
            d *= p;
        }
        p += 1;
    }
    (c, d * rest)
}

impl QuadSurd {
    pub fn rational(a: Rational) -> Self {
        QuadSurd {
            a,
            b: Rational::zero(),
            d: 1,
        }
    }

    pub fn integer(a: i128) -> Self {
        Self::rational(Rational::from_integer(a))
    }

    /// `√m` for an integer `m ≥ 0`.
    pub fn sqrt(m: i128) -> Self {
        let (c, d) = square_part(m);
        QuadSurd {
            a: Rational::zero(),
            b: Rational::from_integer(c),
            d,
        }
        .normalized()
    }

    fn normalized(self) -> Self {
        if self.d == 1 || self.b.is_zero() {
            QuadSurd {
                a: self.a + self.b,
                b: Rational::zero(),
                d: 1,
            }
            .fix_rational()
        } else {
            self
        }
    }

    fn fix_rational(mut self) -> Self {
        if self.b.is_zero() {
            self.d = 1;
        }
        self
    }

    pub fn rational_part(&self) -> Rational {
        self.a
    }

    pub fn irrational_part(&self) -> (Rational, i128) {
        (self.b, self.d)
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_integer(&self) -> Option<i128> {
        (self.is_rational() && self.a.is_integer()).then(|| self.a.to_integer())
    }

    fn common_radicand(&self, other: &Self) -> i128 {
        match (self.is_rational(), other.is_rational()) {
            (true, _) => other.d,
            (_, true) => self.d,
            _ => {
                assert_eq!(self.d, other.d, "surds from different quadratic fields");
                self.d
            }
        }
    }

    /// Exact sign.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&Rational::zero());
        let sb = self.b.cmp(&Rational::zero());
        if sb == Ordering::Equal {
            return sa;
        }
        if sa == Ordering::Equal || sa == sb {
            return sb;
        }
        // opposite signs: compare a² with b²d
        let lhs = self.a * self.a;
        let rhs = self.b * self.b * Rational::from_integer(self.d);
        match lhs.cmp(&rhs) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn div_rational(self, r: Rational) -> Self {
        QuadSurd {
            a: self.a / r,
            b: self.b / r,
            d: self.d,
        }
        .fix_rational()
    }

    /// Division by a nonzero surd via the conjugate.
    pub fn div(self, other: Self) -> Self {
        let conj = QuadSurd {
            a: other.a,
            b: -other.b,
            d: other.d,
        };
        let norm = (other * conj).as_rational().expect("norm is rational");
        assert!(!norm.is_zero(), "division by zero");
        (self * conj).div_rational(norm)
    }

    fn as_rational(&self) -> Option<Rational> {
        self.is_rational().then_some(self.a)
    }

    pub fn to_f64(&self) -> f64 {
        let f = |r: Rational| *r.numer() as f64 / *r.denom() as f64;
        f(self.a) + f(self.b) * (self.d as f64).sqrt()
    }
}

impl Add for QuadSurd {
    type Output = QuadSurd;
    fn add(self, o: Self) -> Self {
        let d = self.common_radicand(&o);
        QuadSurd {
            a: self.a + o.a,
            b: self.b + o.b,
            d,
        }
        .fix_rational()
    }
}

impl Neg for QuadSurd {
    type Output = QuadSurd;
    fn neg(self) -> Self {
        QuadSurd {
            a: -self.a,
            b: -self.b,
            d: self.d,
        }
    }
}

impl Sub for QuadSurd {
    type Output = QuadSurd;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Mul for QuadSurd {
    type Output = QuadSurd;
    fn mul(self, o: Self) -> Self {
        let d = self.common_radicand(&o);
        let dd = Rational::from_integer(d);
        QuadSurd {
            a: self.a * o.a + self.b * o.b * dd,
            b: self.a * o.b + self.b * o.a,
            d,
        }
        .fix_rational()
    }
}

impl PartialOrd for QuadSurd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some((*self - *other).signum())
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.a);
        }
        let b = self.b;
        let sign = if b.is_negative() { "-" } else { "+" };
        let mag = b.abs();
        let coef = if mag == Rational::from_integer(1) {
            String::new()
        } else {
            format!("{mag}*")
        };
        if self.a.is_zero() {
            let lead = if b.is_negative() { "-" } else { "" };
            write!(f, "{lead}{coef}sqrt({})", self.d)
        } else {
            write!(f, "{} {sign} {coef}sqrt({})", self.a, self.d)
        }
    }
}

impl fmt::Debug for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
