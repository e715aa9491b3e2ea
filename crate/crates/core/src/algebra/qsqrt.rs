//! Exact numbers `a + b·√q` with rational `a`, `b`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QSqrt {
    a: BigRational,
    b: BigRational,
    q: u32,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl QSqrt {
    /// `q` must be positive. Perfect squares are allowed but never folded.
    pub fn new(a: BigRational, b: BigRational, q: u32) -> Self {
        assert!(q > 0, "radicand must be positive");
        QSqrt { a, b, q }
    }

    pub fn from_ints(a: i64, b: i64, q: u32) -> Self {
        Self::new(rat(a), rat(b), q)
    }

    pub fn rational(a: BigRational, q: u32) -> Self {
        Self::new(a, BigRational::zero(), q)
    }

    pub fn zero(q: u32) -> Self {
        Self::from_ints(0, 0, q)
    }

    pub fn one(q: u32) -> Self {
        Self::from_ints(1, 0, q)
    }

    /// `√q`.
    pub fn sqrt(q: u32) -> Self {
        Self::from_ints(0, 1, q)
    }

    /// `q^{1/2} - q^{-1/2} = (1 - 1/q)·√q`.
    pub fn ruling_point(q: u32) -> Self {
        let b = BigRational::one() - BigRational::new(BigInt::one(), BigInt::from(q));
        Self::new(BigRational::zero(), b, q)
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn radicand(&self) -> u32 {
        self.q
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    fn same_radicand(&self, other: &QSqrt) {
        assert_eq!(self.q, other.q, "mixed radicands");
    }

    pub fn add(&self, other: &QSqrt) -> QSqrt {
        self.same_radicand(other);
        QSqrt::new(&self.a + &other.a, &self.b + &other.b, self.q)
    }

    pub fn sub(&self, other: &QSqrt) -> QSqrt {
        self.same_radicand(other);
        QSqrt::new(&self.a - &other.a, &self.b - &other.b, self.q)
    }

    pub fn mul(&self, other: &QSqrt) -> QSqrt {
        self.same_radicand(other);
        let q = rat(self.q as i64);
        let a = &self.a * &other.a + &self.b * &other.b * q;
        let b = &self.a * &other.b + &self.b * &other.a;
        QSqrt::new(a, b, self.q)
    }

    pub fn scale(&self, c: &BigRational) -> QSqrt {
        QSqrt::new(&self.a * c, &self.b * c, self.q)
    }

    fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * rat(self.q as i64)
    }

    /// Inverse via the conjugate `a - b√q`.
    pub fn inv(&self) -> Result<QSqrt> {
        if self.is_zero() {
            return Err(Error::Domain("inverse of zero".into()));
        }
        let n = self.norm();
        if n.is_zero() {
            // Only possible for a perfect-square radicand, where a = ±b·√q.
            let r = (self.q as f64).sqrt().round() as i64;
            let value = &self.a + &self.b * rat(r);
            return Ok(QSqrt::rational(value.recip(), self.q));
        }
        Ok(QSqrt::new(&self.a / &n, -&self.b / &n, self.q))
    }

    pub fn pow(&self, exp: i64) -> Result<QSqrt> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut acc = QSqrt::one(self.q);
        for _ in 0..exp.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Exact sign of `a + b√q`.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&BigRational::zero());
        let sb = self.b.cmp(&BigRational::zero());
        match (sa, sb) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (x, y) if x == y => x,
            (sa, _) => {
                // Opposite signs: compare a^2 against q·b^2.
                let lhs = &self.a * &self.a;
                let rhs = &self.b * &self.b * rat(self.q as i64);
                match lhs.cmp(&rhs) {
                    Ordering::Greater => sa,
                    Ordering::Less => sa.reverse(),
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        let f = |r: &BigRational| {
            let n: f64 = r.numer().to_string().parse().unwrap_or(f64::NAN);
            let d: f64 = r.denom().to_string().parse().unwrap_or(f64::NAN);
            n / d
        };
        f(&self.a) + f(&self.b) * (self.q as f64).sqrt()
    }
}

impl PartialOrd for QSqrt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.q != other.q {
            return None;
        }
        Some(self.sub(other).signum())
    }
}

fn fmt_rat(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for QSqrt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rat(&self.a)),
            (true, false) => write!(f, "{}*sqrt({})", fmt_rat(&self.b), self.q),
            (false, false) => {
                let sign = if self.b.is_negative() { '-' } else { '+' };
                write!(f, "{} {} {}*sqrt({})", fmt_rat(&self.a), sign, fmt_rat(&self.b.abs()), self.q)
            }
        }
    }
}
