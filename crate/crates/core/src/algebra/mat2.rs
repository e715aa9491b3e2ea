//! 2×2 matrices over noncommutative polynomials.

use super::field::Field;
use super::ncpoly::NcPoly;
use super::word::Letter;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat2 {
    pub entries: [[NcPoly; 2]; 2],
}

impl Mat2 {
    pub fn new(e00: NcPoly, e01: NcPoly, e10: NcPoly, e11: NcPoly) -> Self {
        Mat2 { entries: [[e00, e01], [e10, e11]] }
    }

    pub fn zero(field: Field) -> Self {
        let z = NcPoly::zero(field);
        Self::new(z.clone(), z.clone(), z.clone(), z)
    }

    pub fn identity(field: Field) -> Self {
        Self::scalar(NcPoly::one(field))
    }

    /// `p` times the identity.
    pub fn scalar(p: NcPoly) -> Self {
        let z = NcPoly::zero(p.field());
        Self::new(p.clone(), z.clone(), z, p)
    }

    pub fn field(&self) -> Field {
        self.entries[0][0].field()
    }

    pub fn get(&self, i: usize, j: usize) -> &NcPoly {
        &self.entries[i][j]
    }

    pub fn add(&self, other: &Mat2) -> Result<Mat2> {
        let e = |i: usize, j: usize| self.entries[i][j].add(&other.entries[i][j]);
        Ok(Mat2::new(e(0, 0)?, e(0, 1)?, e(1, 0)?, e(1, 1)?))
    }

    pub fn sub(&self, other: &Mat2) -> Result<Mat2> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Mat2 {
        let e = |i: usize, j: usize| self.entries[i][j].neg();
        Mat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    /// Product respecting the order of noncommuting entries.
    pub fn mul(&self, other: &Mat2) -> Result<Mat2> {
        let e = |i: usize, j: usize| -> Result<NcPoly> {
            self.entries[i][0].mul(&other.entries[0][j])?.add(&self.entries[i][1].mul(&other.entries[1][j])?)
        };
        Ok(Mat2::new(e(0, 0)?, e(0, 1)?, e(1, 0)?, e(1, 1)?))
    }

    pub fn map_entries(&self, f: impl Fn(&NcPoly) -> Result<NcPoly>) -> Result<Mat2> {
        Ok(Mat2::new(
            f(&self.entries[0][0])?,
            f(&self.entries[0][1])?,
            f(&self.entries[1][0])?,
            f(&self.entries[1][1])?,
        ))
    }
}

/// Extends a letter-to-matrix assignment to a unital ring homomorphism and
/// applies it to `p`. Constants map to scalar multiples of the identity.
pub fn ring_hom_apply(h: &impl Fn(Letter) -> Option<Mat2>, p: &NcPoly) -> Result<Mat2> {
    let field = p.field();
    let mut acc = Mat2::zero(field);
    for (w, c) in p.terms() {
        let mut prod = Mat2::scalar(NcPoly::constant(field, c));
        for &l in w.letters() {
            let image = h(l).ok_or_else(|| Error::UndefinedGenerator(format!("{l:?}")))?;
            prod = prod.mul(&image)?;
        }
        acc = acc.add(&prod)?;
    }
    Ok(acc)
}
