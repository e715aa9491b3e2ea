//! Morphism complexes of the augmentation category from the 2-copy DGA.
//!
//! The 2-copy is built algebraically: chord `a` becomes the matrix
//! `A = (a^{ij})`, the base point becomes `Δ = diag(t¹, t²)`, and two extra
//! generators `x^{12}` (degree 0) and `y^{12}` (degree −1) form
//! `X = [[1, x], [0, 1]]`, `Y = [[0, y], [0, 0]]`. The differential is
//!
//! ```text
//! ∂A = Φ(∂a) + YA − (−1)^{|a|} AY,   ∂X = Δ⁻¹YΔX − XY,   ∂Y = Y²,
//! ```
//!
//! where `Φ(a) = A`, `Φ(t) = ΔX`, `Φ(t⁻¹) = X⁻¹Δ⁻¹`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{ring_hom_apply, Field, FieldElem, Letter, Mat2, Matrix, NcPoly};
use crate::augment::{lch_poincare, validate, Augmentation};
use crate::dga::Dga;
use crate::error::Result;

/// Letter of the 2-copy algebra for entry `(i, j)` of chord `g` (`i, j ∈ {1, 2}`).
pub fn chord_letter(g: usize, i: usize, j: usize) -> Letter {
    Letter::Gen((4 * g + 2 * (i - 1) + (j - 1)) as u32)
}

/// The 2-copy differential on mixed generators, before any augmentation.
#[derive(Debug, Clone)]
pub struct TwoCopyDga {
    field: Field,
    degrees: Vec<i64>,
    /// `∂a^{12}` per chord.
    a12: Vec<NcPoly>,
    /// `∂a^{21}` per chord.
    a21: Vec<NcPoly>,
    x12: NcPoly,
    y12: NcPoly,
}

impl TwoCopyDga {
    pub fn new(d: &Dga) -> Result<TwoCopyDga> {
        let field = d.field();
        let n = d.generators().len();
        let x = Letter::Gen(4 * n as u32);
        let y = Letter::Gen(4 * n as u32 + 1);
        let l = |letter| NcPoly::letter(field, letter);
        let zero = || NcPoly::zero(field);
        let one = || NcPoly::one(field);
        let delta = Mat2::new(l(Letter::Unit(1)), zero(), zero(), l(Letter::Unit(2)));
        let delta_inv = Mat2::new(l(Letter::UnitInv(1)), zero(), zero(), l(Letter::UnitInv(2)));
        let x_mat = Mat2::new(one(), l(x), zero(), one());
        let x_inv = Mat2::new(one(), l(x).neg(), zero(), one());
        let y_mat = Mat2::new(zero(), l(y), zero(), zero());
        let a_mat = |g: usize| Mat2::new(l(chord_letter(g, 1, 1)), l(chord_letter(g, 1, 2)), l(chord_letter(g, 2, 1)), l(chord_letter(g, 2, 2)));
        let phi_t = delta.mul(&x_mat)?;
        let phi_t_inv = x_inv.mul(&delta_inv)?;
        let phi = |letter: Letter| -> Option<Mat2> {
            match letter {
                Letter::Gen(g) => Some(a_mat(g as usize)),
                Letter::Unit(_) => Some(phi_t.clone()),
                Letter::UnitInv(_) => Some(phi_t_inv.clone()),
            }
        };
        let mut a12 = Vec::with_capacity(n);
        let mut a21 = Vec::with_capacity(n);
        for g in 0..n {
            let a = a_mat(g);
            let mut da = ring_hom_apply(&phi, d.differential(g))?.add(&y_mat.mul(&a)?)?;
            let ay = a.mul(&y_mat)?;
            da = if d.degree(g).rem_euclid(2) == 0 { da.sub(&ay)? } else { da.add(&ay)? };
            a12.push(da.get(0, 1).clone());
            a21.push(da.get(1, 0).clone());
        }
        let dx = delta_inv.mul(&y_mat)?.mul(&delta)?.mul(&x_mat)?.sub(&x_mat.mul(&y_mat)?)?;
        let dy = y_mat.mul(&y_mat)?;
        Ok(TwoCopyDga {
            field,
            degrees: d.generators().iter().map(|g| g.degree).collect(),
            a12,
            a21,
            x12: dx.get(0, 1).clone(),
            y12: dy.get(0, 1).clone(),
        })
    }

    pub fn x_letter(&self) -> Letter {
        Letter::Gen(4 * self.degrees.len() as u32)
    }

    pub fn y_letter(&self) -> Letter {
        Letter::Gen(4 * self.degrees.len() as u32 + 1)
    }

    pub fn d_a12(&self, g: usize) -> &NcPoly {
        &self.a12[g]
    }

    pub fn d_a21(&self, g: usize) -> &NcPoly {
        &self.a21[g]
    }

    pub fn d_x12(&self) -> &NcPoly {
        &self.x12
    }

    pub fn d_y12(&self) -> &NcPoly {
        &self.y12
    }

    /// Names 2-copy letters as `a1^12`, `x^12`, `t^1`, …
    pub fn letter_name(&self, d: &Dga, l: Letter) -> String {
        let n = self.degrees.len() as u32;
        match l {
            Letter::Gen(v) if v == 4 * n => "x^12".into(),
            Letter::Gen(v) if v == 4 * n + 1 => "y^12".into(),
            Letter::Gen(v) => {
                let (g, r) = (v / 4, v % 4);
                format!("{}^{}{}", d.generators()[g as usize].id, r / 2 + 1, r % 2 + 1)
            }
            Letter::Unit(i) => format!("t^{i}"),
            Letter::UnitInv(i) => format!("(t^{i})^-1"),
        }
    }

    /// Scalar images of letters under the pair: diagonal chord entries and
    /// `t^i` go to `ε^i`, every mixed generator to 0.
    fn value_fn<'a>(&self, e1: &'a Augmentation, e2: &'a Augmentation) -> impl Fn(Letter) -> FieldElem + 'a {
        let n = self.degrees.len() as u32;
        let zero = self.field.zero();
        move |l: Letter| match l {
            Letter::Gen(v) if v >= 4 * n => zero,
            Letter::Gen(v) => match v % 4 {
                0 => e1.value((v / 4) as usize),
                3 => e2.value((v / 4) as usize),
                _ => zero,
            },
            Letter::Unit(1) => e1.t(),
            Letter::Unit(_) => e2.t(),
            Letter::UnitInv(1) => e1.t().inv().expect("unit"),
            Letter::UnitInv(_) => e2.t().inv().expect("unit"),
        }
    }
}

/// The 2-copy differential of the mixed generators for a fixed pair,
/// after `t^i ↦ ε^i(t)` and conjugation by `φ_ε`.
#[derive(Debug, Clone)]
pub struct TwoCopyDiff {
    pub a12: Vec<NcPoly>,
    pub x12: NcPoly,
    pub y12: NcPoly,
}

pub fn two_copy_diff(d: &Dga, e1: &Augmentation, e2: &Augmentation) -> Result<TwoCopyDiff> {
    validate(d, e1)?;
    validate(d, e2)?;
    let tc = TwoCopyDga::new(d)?;
    let value = tc.value_fn(e1, e2);
    let n = d.generators().len() as u32;
    let field = d.field();
    let conj = |p: &NcPoly| {
        p.substitute(&|l: Letter| -> Result<NcPoly> {
            Ok(match l {
                Letter::Gen(v) if v < 4 * n && (v % 4 == 0 || v % 4 == 3) => {
                    NcPoly::letter(field, l).add(&NcPoly::constant(field, value(l)))?
                }
                Letter::Gen(_) => NcPoly::letter(field, l),
                _ => NcPoly::constant(field, value(l)),
            })
        })
    };
    Ok(TwoCopyDiff {
        a12: tc.a12.iter().map(&conj).collect::<Result<_>>()?,
        x12: conj(&tc.x12)?,
        y12: conj(&tc.y12)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    Plus,
    Minus,
}

/// A finite cochain complex with its `m₁` matrix on a graded basis.
#[derive(Debug, Clone)]
pub struct HomComplex {
    pub variant: Variant,
    pub labels: Vec<String>,
    pub degrees: Vec<i64>,
    /// `m1[(r, c)]` is the coefficient of basis element `r` in `m₁(c)`.
    pub m1: Matrix,
}

impl HomComplex {
    pub fn squares_to_zero(&self) -> bool {
        self.m1.mul(&self.m1).is_zero()
    }

    fn indices(&self, k: i64) -> Vec<usize> {
        (0..self.degrees.len()).filter(|&i| self.degrees[i] == k).collect()
    }

    /// Block of `m₁` from degree `k` to degree `k + 1`.
    pub fn block(&self, k: i64) -> Matrix {
        let (src, dst) = (self.indices(k), self.indices(k + 1));
        Matrix::from_fn(self.m1.field(), dst.len(), src.len(), |i, j| self.m1.get(dst[i], src[j]))
    }

    /// True when every nonzero entry of `m₁` raises degree by one.
    pub fn has_degree_one(&self) -> bool {
        let n = self.degrees.len();
        (0..n).all(|r| (0..n).all(|c| self.m1.get(r, c).is_zero() || self.degrees[r] == self.degrees[c] + 1))
    }

    /// Degree range touched by the basis.
    fn degree_span(&self) -> Vec<i64> {
        let mut ks: Vec<i64> = self.degrees.clone();
        ks.sort_unstable();
        ks.dedup();
        ks
    }
}

/// `dim H^k` per degree, zero entries omitted.
pub fn hom_cohomology(h: &HomComplex) -> BTreeMap<i64, usize> {
    let mut out = BTreeMap::new();
    for k in h.degree_span() {
        let n = h.indices(k).len();
        let dim = n - h.block(k).rank() - h.block(k - 1).rank();
        if dim > 0 {
            out.insert(k, dim);
        }
    }
    out
}

/// Hom complexes for a fixed DGA, sharing one 2-copy computation.
#[derive(Debug, Clone)]
pub struct AugCategory<'a> {
    dga: &'a Dga,
    two_copy: TwoCopyDga,
}

impl<'a> AugCategory<'a> {
    pub fn new(dga: &'a Dga) -> Result<Self> {
        Ok(AugCategory { dga, two_copy: TwoCopyDga::new(dga)? })
    }

    pub fn two_copy(&self) -> &TwoCopyDga {
        &self.two_copy
    }

    /// `Hom₊(ε₁, ε₂) = (C^{12})^∨` on `a^∨, x^∨, y^∨`, or `Hom₋(ε₁, ε₂)`
    /// on the `a^∨` alone.
    ///
    /// `Hom₋(ε₁, ε₂)` is dual to the `a^{21}` part of the 2-copy whose first
    /// copy carries `ε₂` and second copy `ε₁`.
    pub fn hom(&self, e1: &Augmentation, e2: &Augmentation, variant: Variant) -> Result<HomComplex> {
        let d = self.dga;
        validate(d, e1)?;
        validate(d, e2)?;
        let tc = &self.two_copy;
        let n = d.generators().len();
        let mut labels: Vec<String> = d.generators().iter().map(|g| format!("{}^v", g.id)).collect();
        let mut degrees: Vec<i64> = d.generators().iter().map(|g| g.degree + 1).collect();
        // (letter c, differential of g) pairs indexed like the basis
        let mut letters: Vec<Letter> = Vec::with_capacity(n + 2);
        let mut diffs: Vec<&NcPoly> = Vec::with_capacity(n + 2);
        let value: Box<dyn Fn(Letter) -> FieldElem> = match variant {
            Variant::Plus => {
                letters.extend((0..n).map(|g| chord_letter(g, 1, 2)));
                diffs.extend(tc.a12.iter());
                letters.push(tc.x_letter());
                letters.push(tc.y_letter());
                diffs.push(&tc.x12);
                diffs.push(&tc.y12);
                labels.push("x^v".into());
                labels.push("y^v".into());
                degrees.push(1);
                degrees.push(0);
                Box::new(tc.value_fn(e1, e2))
            }
            Variant::Minus => {
                letters.extend((0..n).map(|g| chord_letter(g, 2, 1)));
                diffs.extend(tc.a21.iter());
                Box::new(tc.value_fn(e2, e1))
            }
        };
        let m = letters.len();
        let m1 = Matrix::from_fn(d.field(), m, m, |r, c| diffs[r].linear_coefficient(letters[c], &value));
        Ok(HomComplex { variant, labels, degrees, m1 })
    }
}

pub fn hom_complex(d: &Dga, e1: &Augmentation, e2: &Augmentation, variant: Variant) -> Result<HomComplex> {
    AugCategory::new(d)?.hom(e1, e2, variant)
}

/// Outcome of the structural checks for one ordered pair `(ε_i, ε_j)`.
#[derive(Debug, Clone, Serialize)]
pub struct PairReport {
    pub first: usize,
    pub second: usize,
    pub plus: BTreeMap<i64, usize>,
    pub minus: BTreeMap<i64, usize>,
    pub m1_squared_zero: bool,
    /// `dim H^k Hom₋(ε_i, ε_j) = dim H^{2−k} Hom₊(ε_j, ε_i)` for all `k`.
    pub duality: bool,
    /// Dimension bounds from the exact sequence; see [`les_holds`].
    pub les: bool,
    /// `−y^∨` closed and nonzero in `H⁰`; diagonal pairs only.
    pub unit: Option<bool>,
    /// `dim H^k Hom₊(ε, ε) = dim LCH_{1−k}`; diagonal pairs only.
    pub identification: Option<bool>,
}

impl PairReport {
    pub fn passed(&self) -> bool {
        self.m1_squared_zero && self.duality && self.les && self.unit != Some(false) && self.identification != Some(false)
    }
}

fn get(m: &BTreeMap<i64, usize>, k: i64) -> usize {
    m.get(&k).copied().unwrap_or(0)
}

fn euler(m: &BTreeMap<i64, usize>) -> i64 {
    m.iter().map(|(&k, &n)| if k.rem_euclid(2) == 0 { n as i64 } else { -(n as i64) }).sum()
}

/// Sabloff duality between `Hom₋(ε₁, ε₂)` and `Hom₊(ε₂, ε₁)`.
pub fn duality_holds(minus_12: &BTreeMap<i64, usize>, plus_21: &BTreeMap<i64, usize>) -> bool {
    let ks: Vec<i64> = minus_12.keys().copied().chain(plus_21.keys().map(|k| 2 - k)).collect();
    ks.iter().all(|&k| get(minus_12, k) == get(plus_21, 2 - k))
}

/// Numerical consequences of the exact sequence
/// `H^{k−1}(Λ) → H^k Hom₋ → H^k Hom₊ → H^k(Λ)` with `H^*(Λ) = H^*(S¹)`:
/// equal Euler characteristics, `Hom₊` exceeds `Hom₋` by at most one and
/// only in degrees 0 and 1, `Hom₋` exceeds `Hom₊` by at most one and only
/// in degrees 1 and 2.
pub fn les_holds(plus: &BTreeMap<i64, usize>, minus: &BTreeMap<i64, usize>) -> bool {
    if euler(plus) != euler(minus) {
        return false;
    }
    let ks: Vec<i64> = plus.keys().chain(minus.keys()).copied().collect();
    ks.iter().all(|&k| {
        let (p, m) = (get(plus, k), get(minus, k));
        let plus_room = usize::from(k == 0 || k == 1);
        let minus_room = usize::from(k == 1 || k == 2);
        p <= m + plus_room && m <= p + minus_room
    })
}

/// The stricter reading "gaps of at most one, in degrees 0 and 1 only".
pub fn gaps_only_in_low_degrees(plus: &BTreeMap<i64, usize>, minus: &BTreeMap<i64, usize>) -> bool {
    let ks: Vec<i64> = plus.keys().chain(minus.keys()).copied().collect();
    ks.iter().all(|&k| {
        let gap = get(plus, k).abs_diff(get(minus, k));
        gap == 0 || ((k == 0 || k == 1) && gap <= 1)
    })
}

/// Whether `−y^∨` is a cocycle not in the image of `m₁`.
pub fn unit_is_nonzero(h: &HomComplex) -> bool {
    let y = h.labels.iter().position(|s| s == "y^v").expect("plus variant");
    let n = h.degrees.len();
    let closed = (0..n).all(|r| h.m1.get(r, y).is_zero());
    if !closed {
        return false;
    }
    // y^∨ is exact iff appending it to the image of m₁ does not raise the rank
    let image = h.m1.clone();
    let mut with_y = Matrix::zeros(image.field(), n, n + 1);
    for r in 0..n {
        for c in 0..n {
            with_y.set(r, c, image.get(r, c));
        }
    }
    with_y.set(y, n, image.field().one());
    with_y.rank() > image.rank()
}

/// Runs every structural check over all ordered pairs of `augs`.
pub fn check_pairs(d: &Dga, augs: &[Augmentation]) -> Result<Vec<PairReport>> {
    let cat = AugCategory::new(d)?;
    let lch: Vec<BTreeMap<i64, usize>> = augs
        .iter()
        .map(|e| lch_poincare(d, e).map(|p| p.terms().map(|(k, n)| (k, n as usize)).collect()))
        .collect::<Result<_>>()?;
    let pairs: Vec<(usize, usize)> = (0..augs.len()).flat_map(|i| (0..augs.len()).map(move |j| (i, j))).collect();
    pairs
        .par_iter()
        .map(|&(i, j)| {
            let plus = cat.hom(&augs[i], &augs[j], Variant::Plus)?;
            let minus = cat.hom(&augs[i], &augs[j], Variant::Minus)?;
            let plus_rev = cat.hom(&augs[j], &augs[i], Variant::Plus)?;
            let (hp, hm, hp_rev) = (hom_cohomology(&plus), hom_cohomology(&minus), hom_cohomology(&plus_rev));
            let diagonal = i == j;
            let identification = diagonal.then(|| {
                let ks: Vec<i64> = hp.keys().copied().chain(lch[i].keys().map(|k| 1 - k)).collect();
                ks.iter().all(|&k| get(&hp, k) == get(&lch[i], 1 - k))
            });
            Ok(PairReport {
                first: i,
                second: j,
                m1_squared_zero: plus.squares_to_zero() && minus.squares_to_zero(),
                duality: duality_holds(&hm, &hp_rev),
                les: les_holds(&hp, &hm),
                unit: diagonal.then(|| unit_is_nonzero(&plus)),
                identification,
                plus: hp,
                minus: hm,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests;
