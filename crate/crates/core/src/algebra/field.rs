//! Prime fields `F_q`.

use std::fmt;

use crate::error::{Error, Result};

pub fn is_prime(q: u32) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The prime field of order `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Field {
    q: u32,
}

impl Field {
    pub fn new(q: u32) -> Result<Self> {
        if is_prime(q) {
            Ok(Field { q })
        } else {
            Err(Error::NotPrime(q))
        }
    }

    pub fn order(self) -> u32 {
        self.q
    }

    pub fn elem(self, value: i64) -> FieldElem {
        FieldElem {
            value: value.rem_euclid(self.q as i64) as u32,
            modulus: self.q,
        }
    }

    pub fn zero(self) -> FieldElem {
        self.elem(0)
    }

    pub fn one(self) -> FieldElem {
        self.elem(1)
    }

    /// All elements in increasing order of representative.
    pub fn elements(self) -> impl Iterator<Item = FieldElem> {
        (0..self.q).map(move |v| FieldElem { value: v, modulus: self.q })
    }

    pub fn units(self) -> impl Iterator<Item = FieldElem> {
        self.elements().skip(1)
    }

    pub(crate) fn reduce(self, v: u64) -> u32 {
        (v % self.q as u64) as u32
    }

    pub(crate) fn add_raw(self, a: u32, b: u32) -> u32 {
        self.reduce(a as u64 + b as u64)
    }

    pub(crate) fn sub_raw(self, a: u32, b: u32) -> u32 {
        self.reduce(a as u64 + (self.q - b) as u64)
    }

    pub(crate) fn mul_raw(self, a: u32, b: u32) -> u32 {
        self.reduce(a as u64 * b as u64)
    }

    pub(crate) fn neg_raw(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    /// Inverse by Fermat; `a` must be nonzero.
    pub(crate) fn inv_raw(self, a: u32) -> u32 {
        debug_assert!(!a.is_multiple_of(self.q));
        let mut base = a as u64 % self.q as u64;
        let mut exp = self.q - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.q as u64;
            }
            base = base * base % self.q as u64;
            exp >>= 1;
        }
        acc as u32
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem {
    value: u32,
    modulus: u32,
}

impl FieldElem {
    pub fn value(self) -> u32 {
        self.value
    }

    pub fn field(self) -> Field {
        Field { q: self.modulus }
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inv(self) -> Option<FieldElem> {
        if self.value == 0 {
            None
        } else {
            Some(FieldElem {
                value: self.field().inv_raw(self.value),
                modulus: self.modulus,
            })
        }
    }

    fn check(self, other: FieldElem) {
        assert_eq!(self.modulus, other.modulus, "mixed field moduli");
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl std::ops::Add for FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: FieldElem) -> FieldElem {
        self.check(rhs);
        FieldElem {
            value: self.field().add_raw(self.value, rhs.value),
            modulus: self.modulus,
        }
    }
}

impl std::ops::Sub for FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: FieldElem) -> FieldElem {
        self.check(rhs);
        FieldElem {
            value: self.field().sub_raw(self.value, rhs.value),
            modulus: self.modulus,
        }
    }
}

impl std::ops::Mul for FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: FieldElem) -> FieldElem {
        self.check(rhs);
        FieldElem {
            value: self.field().mul_raw(self.value, rhs.value),
            modulus: self.modulus,
        }
    }
}

impl std::ops::Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem {
            value: self.field().neg_raw(self.value),
            modulus: self.modulus,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_composite_moduli() {
        assert_eq!(Field::new(4), Err(Error::NotPrime(4)));
        assert_eq!(Field::new(1), Err(Error::NotPrime(1)));
        assert!(Field::new(2).is_ok());
        assert!(Field::new(7).is_ok());
    }

    #[test]
    fn every_unit_has_an_inverse() {
        for q in [2, 3, 5, 7, 11] {
            let f = Field::new(q).unwrap();
            for a in f.units() {
                assert_eq!(a * a.inv().unwrap(), f.one());
            }
            assert!(f.zero().inv().is_none());
        }
    }

    #[test]
    fn negative_representatives_wrap() {
        let f = Field::new(3).unwrap();
        assert_eq!(f.elem(-1).value(), 2);
        assert_eq!(-f.one(), f.elem(2));
        assert_eq!(f.elem(2) - f.elem(1) + f.elem(5), f.elem(0));
    }
}
