//! Laurent polynomials with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Serialize, Serializer};

use super::qsqrt::QSqrt;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(coeff: i64, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(coeff, exp);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut p = Self::zero();
        for (exp, coeff) in terms {
            p.add_term(coeff, exp);
        }
        p
    }

    pub fn add_term(&mut self, coeff: i64, exp: i64) {
        let c = self.terms.entry(exp).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Sum of coefficients (the value at 1).
    pub fn coefficient_sum(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Value at -1.
    pub fn alternating_sum(&self) -> i64 {
        self.terms.iter().map(|(&e, &c)| if e.rem_euclid(2) == 0 { c } else { -c }).sum()
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(c, e);
        }
        out
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(c1 * c2, e1 + e2);
            }
        }
        out
    }

    /// Exact evaluation at `z`; negative powers use the conjugate inverse.
    pub fn eval(&self, z: &QSqrt) -> Result<QSqrt> {
        let q = z.radicand();
        if self.min_exp().is_some_and(|e| e < 0) && z.is_zero() {
            return Err(Error::Domain("negative exponent evaluated at zero".into()));
        }
        let mut acc = QSqrt::zero(q);
        for (e, c) in self.terms() {
            let c = BigRational::from_integer(BigInt::from(c));
            acc = acc.add(&z.pow(e)?.scale(&c));
        }
        Ok(acc)
    }

    pub fn display_in(&self, var: &str) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms().enumerate() {
            let mag = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            let power = match e {
                0 => String::new(),
                1 => var.to_string(),
                e => format!("{var}^{e}"),
            };
            if power.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag == 1 {
                out.push_str(&power);
            } else {
                out.push_str(&format!("{mag}{power}"));
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Evaluate `p` at `q^{1/2} - q^{-1/2}`.
pub fn qsqrt_eval(p: &LaurentPoly, z: &QSqrt) -> Result<QSqrt> {
    p.eval(z)
}
