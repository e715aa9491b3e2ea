//! Noncommutative polynomials over a prime field.

use std::collections::BTreeMap;

use super::field::{Field, FieldElem};
use super::word::{Letter, Word};
use crate::error::{Error, Result};

/// A finite `F_q`-linear combination of reduced words.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NcPoly {
    field: Field,
    terms: BTreeMap<Word, u32>,
}

impl NcPoly {
    pub fn zero(field: Field) -> Self {
        NcPoly { field, terms: BTreeMap::new() }
    }

    pub fn constant(field: Field, c: FieldElem) -> Self {
        Self::term(field, Word::empty(), c)
    }

    pub fn one(field: Field) -> Self {
        Self::constant(field, field.one())
    }

    pub fn letter(field: Field, l: Letter) -> Self {
        Self::term(field, Word::letter(l), field.one())
    }

    pub fn term(field: Field, w: Word, c: FieldElem) -> Self {
        let mut p = Self::zero(field);
        p.add_term(w, c.value());
        p
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (length-lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, FieldElem)> + '_ {
        self.terms.iter().map(move |(w, &c)| (w, self.field.elem(c as i64)))
    }

    pub fn coeff(&self, w: &Word) -> FieldElem {
        self.field.elem(self.terms.get(w).copied().unwrap_or(0) as i64)
    }

    pub fn constant_term(&self) -> FieldElem {
        self.coeff(&Word::empty())
    }

    pub(crate) fn add_term(&mut self, w: Word, c: u32) {
        let c = self.field.reduce(c as u64);
        if c == 0 {
            return;
        }
        let f = self.field;
        let slot = self.terms.entry(w.clone()).or_insert(0);
        *slot = f.add_raw(*slot, c);
        if *slot == 0 {
            self.terms.remove(&w);
        }
    }

    fn check(&self, other: &NcPoly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch { left: self.field.order(), right: other.field.order() });
        }
        Ok(())
    }

    pub fn add(&self, other: &NcPoly) -> Result<NcPoly> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, &c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &NcPoly) -> Result<NcPoly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> NcPoly {
        self.scale(-self.field.one())
    }

    pub fn scale(&self, c: FieldElem) -> NcPoly {
        let mut out = NcPoly::zero(self.field);
        for (w, &v) in &self.terms {
            out.add_term(w.clone(), self.field.mul_raw(v, c.value()));
        }
        out
    }

    pub fn mul(&self, other: &NcPoly) -> Result<NcPoly> {
        nc_mul(self, other)
    }

    /// Keep only the terms whose word satisfies `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Word) -> bool) -> NcPoly {
        NcPoly {
            field: self.field,
            terms: self.terms.iter().filter(|(w, _)| keep(w)).map(|(w, &c)| (w.clone(), c)).collect(),
        }
    }

    /// Applies the algebra map determined by `image` on letters.
    pub fn substitute(&self, image: &impl Fn(Letter) -> Result<NcPoly>) -> Result<NcPoly> {
        let mut out = NcPoly::zero(self.field);
        for (w, &c) in &self.terms {
            let mut prod = NcPoly::constant(self.field, self.field.elem(c as i64));
            for &l in w.letters() {
                prod = prod.mul(&image(l)?)?;
            }
            out = out.add(&prod)?;
        }
        Ok(out)
    }

    /// Evaluates under a letter-wise scalar assignment (a ring map to `F_q`).
    /// Returns `None` if some letter has no value.
    pub fn evaluate(&self, value: impl Fn(Letter) -> Option<FieldElem>) -> Option<FieldElem> {
        let f = self.field;
        let mut acc = 0u32;
        for (w, &c) in &self.terms {
            let mut prod = c;
            for &l in w.letters() {
                let v = value(l)?;
                prod = f.mul_raw(prod, v.value());
                if prod == 0 {
                    break;
                }
            }
            acc = f.add_raw(acc, prod);
        }
        Some(f.elem(acc as i64))
    }

    /// Coefficient of the single letter `target` in `φ(self)`, where `φ`
    /// sends every letter `l` to `l + value(l)` (scalar letters to their value).
    ///
    /// For a word `l_1 ⋯ l_n` this is `Σ_j [l_j = target] Π_{i≠j} value(l_i)`.
    pub fn linear_coefficient(&self, target: Letter, value: &impl Fn(Letter) -> FieldElem) -> FieldElem {
        let f = self.field;
        let mut acc = 0u32;
        for (w, &c) in &self.terms {
            let letters = w.letters();
            for (j, &l) in letters.iter().enumerate() {
                if l != target {
                    continue;
                }
                let mut prod = c;
                for (i, &m) in letters.iter().enumerate() {
                    if i != j {
                        prod = f.mul_raw(prod, value(m).value());
                    }
                }
                acc = f.add_raw(acc, prod);
            }
        }
        f.elem(acc as i64)
    }

    /// Degrees of the terms present (a polynomial may be inhomogeneous).
    pub fn degrees(&self, gen_degree: impl Fn(u32) -> i64) -> Vec<i64> {
        let mut ds: Vec<i64> = self.terms.keys().map(|w| w.degree(&gen_degree)).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// Letters occurring anywhere in the polynomial.
    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.terms.keys().flat_map(|w| w.letters().iter().copied())
    }

    /// Human-readable rendering with a letter namer.
    pub fn display_with(&self, name: impl Fn(Letter) -> String) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let q = self.field.order();
        let mut parts = Vec::new();
        for (w, &c) in &self.terms {
            let body: Vec<String> = w.letters().iter().map(|&l| name(l)).collect();
            let body = body.join(" ");
            let (neg, mag) = if q > 2 && c > q / 2 { (true, q - c) } else { (false, c) };
            let mut s = String::new();
            if neg {
                s.push('-');
            }
            match (mag, body.is_empty()) {
                (m, true) => s.push_str(&m.to_string()),
                (1, false) => s.push_str(&body),
                (m, false) => s.push_str(&format!("{m} {body}")),
            }
            parts.push(s);
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

/// Product with word concatenation and unit cancellation.
pub fn nc_mul(p: &NcPoly, r: &NcPoly) -> Result<NcPoly> {
    p.check(r)?;
    let f = p.field;
    let mut out = NcPoly::zero(f);
    for (w1, &c1) in &p.terms {
        for (w2, &c2) in &r.terms {
            out.add_term(w1.concat(w2), f.mul_raw(c1, c2));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const T: Letter = Letter::Unit(0);
    const TI: Letter = Letter::UnitInv(0);

    fn f(q: u32) -> Field {
        Field::new(q).unwrap()
    }

    #[test]
    fn t_times_t_inverse_is_one() {
        let k = f(2);
        let p = NcPoly::letter(k, T).mul(&NcPoly::letter(k, TI)).unwrap();
        assert_eq!(p, NcPoly::one(k));
    }

    #[test]
    fn distributes_on_the_right() {
        let k = f(5);
        let (a, b, c) = (Letter::Gen(0), Letter::Gen(1), Letter::Gen(2));
        let lhs = NcPoly::letter(k, a).add(&NcPoly::letter(k, b)).unwrap().mul(&NcPoly::letter(k, c)).unwrap();
        let rhs = NcPoly::term(k, Word::new([a, c]), k.one()).add(&NcPoly::term(k, Word::new([b, c]), k.one())).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn square_of_one_plus_t_over_f2() {
        let k = f(2);
        let p = NcPoly::one(k).add(&NcPoly::letter(k, T)).unwrap();
        let sq = p.mul(&p).unwrap();
        let expected = NcPoly::one(k).add(&NcPoly::term(k, Word::new([T, T]), k.one())).unwrap();
        assert_eq!(sq, expected);
    }

    #[test]
    fn mismatched_fields_are_rejected() {
        let err = NcPoly::one(f(2)).mul(&NcPoly::one(f(3))).unwrap_err();
        assert_eq!(err, Error::FieldMismatch { left: 2, right: 3 });
    }

    #[test]
    fn linear_coefficient_uses_values_of_other_letters() {
        let k = f(3);
        let (a, b) = (Letter::Gen(0), Letter::Gen(1));
        // 2·a b a  with value(a) = 2: coefficient of b = 2·2·2 = 8 = 2 mod 3
        let p = NcPoly::term(k, Word::new([a, b, a]), k.elem(2));
        let v = |l: Letter| if l == a { k.elem(2) } else { k.zero() };
        assert_eq!(p.linear_coefficient(b, &v), k.elem(2));
        // coefficient of a: position 0 -> 2·value(b)·value(a) = 0, position 2 likewise
        assert_eq!(p.linear_coefficient(a, &v), k.zero());
    }

    fn poly(q: u32) -> impl Strategy<Value = NcPoly> {
        let letter = prop_oneof![
            (0u32..2).prop_map(Letter::Gen),
            Just(T),
            Just(TI),
        ];
        proptest::collection::vec((proptest::collection::vec(letter, 0..4), 0u32..q), 0..4).prop_map(move |ts| {
            let k = Field::new(q).unwrap();
            let mut p = NcPoly::zero(k);
            for (w, c) in ts {
                p.add_term(Word::new(w), c);
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_axioms_f2(a in poly(2), b in poly(2), c in poly(2)) {
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            prop_assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
            prop_assert_eq!(a.add(&b).unwrap().mul(&c).unwrap(), a.mul(&c).unwrap().add(&b.mul(&c).unwrap()).unwrap());
        }

        #[test]
        fn ring_axioms_f3(a in poly(3), b in poly(3), c in poly(3)) {
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            prop_assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
            prop_assert_eq!(a.add(&b).unwrap().mul(&c).unwrap(), a.mul(&c).unwrap().add(&b.mul(&c).unwrap()).unwrap());
            prop_assert!(a.sub(&a).unwrap().is_zero());
        }
    }
}
