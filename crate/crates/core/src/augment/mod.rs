//! Graded augmentations over `F_q` and linearized contact homology.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Field, FieldElem, LaurentPoly, Letter, Matrix};
use crate::dga::Dga;
use crate::error::{Error, Result};

/// Largest candidate space the enumerator will scan.
pub const SEARCH_LIMIT: u128 = 1 << 30;

/// A graded augmentation: values on chords (zero off degree 0) and on `t`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Augmentation {
    t: FieldElem,
    values: Vec<FieldElem>,
}

impl Augmentation {
    pub fn new(t: FieldElem, values: Vec<FieldElem>) -> Self {
        Augmentation { t, values }
    }

    pub fn t(&self) -> FieldElem {
        self.t
    }

    pub fn values(&self) -> &[FieldElem] {
        &self.values
    }

    pub fn value(&self, g: usize) -> FieldElem {
        self.values[g]
    }

    /// Value on a letter; `t^-1` maps to the inverse of `ε(t)`.
    pub fn letter_value(&self, l: Letter) -> FieldElem {
        match l {
            Letter::Gen(g) => self.values[g as usize],
            Letter::Unit(_) => self.t,
            Letter::UnitInv(_) => self.t.inv().expect("augmentation sends t to a unit"),
        }
    }

    /// Human-readable `t=1 a1=0 …`, listing degree-0 chords only.
    pub fn describe(&self, d: &Dga) -> String {
        let mut parts = vec![format!("t={}", self.t)];
        for (g, gen) in d.generators().iter().enumerate() {
            if gen.degree == 0 {
                parts.push(format!("{}={}", gen.id, self.values[g]));
            }
        }
        parts.join(" ")
    }
}

/// Checks the augmentation axioms against `d`.
pub fn validate(d: &Dga, e: &Augmentation) -> Result<()> {
    let bad = |m: String| Err(Error::InvalidAugmentation(m));
    if e.values.len() != d.generators().len() {
        return bad(format!("{} values for {} chords", e.values.len(), d.generators().len()));
    }
    if e.t.field() != d.field() || e.values.iter().any(|v| v.field() != d.field()) {
        return bad("values lie in a different field".into());
    }
    if e.t.is_zero() {
        return bad("t must map to a unit".into());
    }
    for (g, gen) in d.generators().iter().enumerate() {
        if gen.degree != 0 && !e.values[g].is_zero() {
            return bad(format!("{} has degree {} but value {}", gen.id, gen.degree, e.values[g]));
        }
    }
    for (g, gen) in d.generators().iter().enumerate() {
        let v = d.differential(g).evaluate(|l| Some(e.letter_value(l))).expect("total assignment");
        if !v.is_zero() {
            return bad(format!("ε(∂{}) = {v}", gen.id));
        }
    }
    Ok(())
}

/// Variable slots of the search: `t` is slot 0, degree-0 chords follow.
#[derive(Debug, Clone, Copy)]
enum Slot {
    T,
    TInv,
    Var(usize),
}

/// An equation `ε(∂a) = 0` restricted to terms that can be nonzero.
#[derive(Debug, Clone)]
struct Equation {
    terms: Vec<(u32, Vec<Slot>)>,
    /// Number of chord variables that must be assigned before evaluating.
    ready: usize,
}

struct Problem {
    field: Field,
    vars: Vec<usize>,
    equations: Vec<Equation>,
    nchords: usize,
}

impl Problem {
    fn new(d: &Dga, order: &[usize]) -> Problem {
        let var_of: BTreeMap<usize, usize> = order.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let mut equations = Vec::new();
        for g in 0..d.generators().len() {
            if d.degree(g) != 1 {
                continue;
            }
            let mut terms = Vec::new();
            let mut ready = 0;
            'term: for (w, c) in d.differential(g).terms() {
                let mut slots = Vec::with_capacity(w.len());
                for &l in w.letters() {
                    slots.push(match l {
                        Letter::Unit(_) => Slot::T,
                        Letter::UnitInv(_) => Slot::TInv,
                        Letter::Gen(x) => match var_of.get(&(x as usize)) {
                            Some(&i) => Slot::Var(i),
                            None => continue 'term,
                        },
                    });
                }
                for s in &slots {
                    if let Slot::Var(i) = s {
                        ready = ready.max(i + 1);
                    }
                }
                terms.push((c.value(), slots));
            }
            equations.push(Equation { terms, ready });
        }
        Problem { field: d.field(), vars: order.to_vec(), equations, nchords: d.generators().len() }
    }

    fn candidates(&self) -> u128 {
        let q = self.field.order() as u128;
        let mut n = q - 1;
        for _ in &self.vars {
            n = n.saturating_mul(q);
        }
        n
    }

    fn eval(&self, eq: &Equation, t: u32, tinv: u32, vals: &[u32]) -> u32 {
        let f = self.field;
        let mut acc = 0;
        for (c, slots) in &eq.terms {
            let mut prod = *c;
            for s in slots {
                let v = match *s {
                    Slot::T => t,
                    Slot::TInv => tinv,
                    Slot::Var(i) => vals[i],
                };
                prod = f.mul_raw(prod, v);
                if prod == 0 {
                    break;
                }
            }
            acc = f.add_raw(acc, prod);
        }
        acc
    }

    fn build(&self, t: u32, vals: &[u32]) -> Augmentation {
        let f = self.field;
        let mut values = vec![f.zero(); self.nchords];
        for (i, &g) in self.vars.iter().enumerate() {
            values[g] = f.elem(vals[i] as i64);
        }
        Augmentation { t: f.elem(t as i64), values }
    }

    fn solve_brute(&self) -> Vec<Augmentation> {
        let f = self.field;
        let q = f.order() as u64;
        let n = self.vars.len();
        let per_t = q.pow(n as u32);
        let units: Vec<u32> = f.units().map(|u| u.value()).collect();
        (0..units.len() as u64 * per_t)
            .into_par_iter()
            .filter_map(|idx| {
                let t = units[(idx / per_t) as usize];
                let tinv = f.inv_raw(t);
                let mut rest = idx % per_t;
                let mut vals = vec![0u32; n];
                for i in (0..n).rev() {
                    vals[i] = (rest % q) as u32;
                    rest /= q;
                }
                self.equations.iter().all(|eq| self.eval(eq, t, tinv, &vals) == 0).then(|| self.build(t, &vals))
            })
            .collect()
    }

    fn solve_pruned(&self) -> Vec<Augmentation> {
        let f = self.field;
        let mut by_depth: Vec<Vec<usize>> = vec![Vec::new(); self.vars.len() + 1];
        for (i, eq) in self.equations.iter().enumerate() {
            by_depth[eq.ready].push(i);
        }
        let units: Vec<u32> = f.units().map(|u| u.value()).collect();
        units
            .par_iter()
            .flat_map_iter(|&t| {
                let mut out = Vec::new();
                let mut vals = vec![0u32; self.vars.len()];
                self.extend(t, f.inv_raw(t), 0, &mut vals, &by_depth, &mut out);
                out
            })
            .collect()
    }

    fn extend(&self, t: u32, tinv: u32, depth: usize, vals: &mut [u32], by_depth: &[Vec<usize>], out: &mut Vec<Augmentation>) {
        if by_depth[depth].iter().any(|&i| self.eval(&self.equations[i], t, tinv, vals) != 0) {
            return;
        }
        if depth == vals.len() {
            out.push(self.build(t, vals));
            return;
        }
        for v in 0..self.field.order() {
            vals[depth] = v;
            self.extend(t, tinv, depth + 1, vals, by_depth, out);
        }
        vals[depth] = 0;
    }
}

fn degree_zero_chords(d: &Dga) -> Vec<usize> {
    (0..d.generators().len()).filter(|&g| d.degree(g) == 0).collect()
}

fn problem_for(d: &Dga, order: &[usize]) -> Result<Problem> {
    let p = Problem::new(d, order);
    let n = p.candidates();
    if n > SEARCH_LIMIT {
        return Err(Error::SearchSpace(n));
    }
    Ok(p)
}

/// All augmentations, ordered by `ε(t)` and then by the values on degree-0
/// chords in generator order. Uses backtracking with early rejection.
pub fn enumerate_augmentations(d: &Dga) -> Result<Vec<Augmentation>> {
    Ok(problem_for(d, &degree_zero_chords(d))?.solve_pruned())
}

/// Reference enumeration: every candidate is tested. Same order as
/// [`enumerate_augmentations`].
pub fn enumerate_augmentations_brute_force(d: &Dga) -> Result<Vec<Augmentation>> {
    Ok(problem_for(d, &degree_zero_chords(d))?.solve_brute())
}

/// Backtracking over degree-0 chords in the given order; results sorted.
pub fn enumerate_augmentations_in_order(d: &Dga, order: &[usize]) -> Result<Vec<Augmentation>> {
    let mut v = problem_for(d, order)?.solve_pruned();
    v.sort();
    Ok(v)
}

/// Chords grouped by degree with the linearized differential.
#[derive(Debug, Clone)]
pub struct LinearizedComplex {
    field: Field,
    basis: BTreeMap<i64, Vec<usize>>,
    /// `matrices[k]` maps degree `k` to degree `k - 1`; rows index
    /// `basis[k - 1]`, columns index `basis[k]`.
    matrices: BTreeMap<i64, Matrix>,
}

impl LinearizedComplex {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn basis(&self) -> &BTreeMap<i64, Vec<usize>> {
        &self.basis
    }

    pub fn matrix(&self, k: i64) -> Option<&Matrix> {
        self.matrices.get(&k)
    }

    fn dim(&self, k: i64) -> usize {
        self.basis.get(&k).map_or(0, Vec::len)
    }

    /// True when every composite `D_{k-1} D_k` vanishes.
    pub fn squares_to_zero(&self) -> bool {
        self.matrices
            .iter()
            .all(|(k, m)| self.matrices.get(&(k - 1)).is_none_or(|prev| prev.mul(m).is_zero()))
    }

    fn homology_with(&self, rank: impl Fn(&Matrix) -> usize) -> BTreeMap<i64, usize> {
        let r = |k: i64| self.matrices.get(&k).map_or(0, &rank);
        self.basis
            .keys()
            .map(|&k| (k, self.dim(k) - r(k) - r(k + 1)))
            .filter(|&(_, n)| n > 0)
            .collect()
    }

    /// `dim LCH_k` by row reduction; degrees with zero homology are omitted.
    pub fn homology(&self) -> BTreeMap<i64, usize> {
        self.homology_with(Matrix::rank)
    }

    /// The same dimensions computed by column reduction.
    pub fn homology_by_columns(&self) -> BTreeMap<i64, usize> {
        self.homology_with(Matrix::rank_by_columns)
    }
}

/// The linear part of `φ_ε ∘ ∂ ∘ φ_ε⁻¹`, where `φ_ε(a) = a + ε(a)`.
pub fn linearize(d: &Dga, e: &Augmentation) -> Result<LinearizedComplex> {
    validate(d, e)?;
    let field = d.field();
    let mut basis: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (g, gen) in d.generators().iter().enumerate() {
        basis.entry(gen.degree).or_default().push(g);
    }
    let value = |l: Letter| e.letter_value(l);
    let mut matrices = BTreeMap::new();
    for (&k, cols) in &basis {
        let Some(rows) = basis.get(&(k - 1)) else {
            continue;
        };
        let m = Matrix::from_fn(field, rows.len(), cols.len(), |i, j| {
            d.differential(cols[j]).linear_coefficient(Letter::Gen(rows[i] as u32), &value)
        });
        matrices.insert(k, m);
    }
    Ok(LinearizedComplex { field, basis, matrices })
}

/// `Σ_k dim LCH_k^ε t^k`.
pub fn lch_poincare(d: &Dga, e: &Augmentation) -> Result<LaurentPoly> {
    let c = linearize(d, e)?;
    Ok(LaurentPoly::from_terms(c.homology().into_iter().map(|(k, n)| (k, n as i64))))
}

/// Sorted, deduplicated Poincaré polynomials over all augmentations.
pub fn lch_spectrum(d: &Dga) -> Result<Vec<LaurentPoly>> {
    spectrum_of(d, &enumerate_augmentations(d)?)
}

pub(crate) fn spectrum_of(d: &Dga, augs: &[Augmentation]) -> Result<Vec<LaurentPoly>> {
    let mut out = augs.par_iter().map(|e| lch_poincare(d, e)).collect::<Result<Vec<_>>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

/// Summary used by reports.
#[derive(Debug, Clone, Serialize)]
pub struct AugmentationSummary {
    pub q: u32,
    pub count: usize,
    /// Distinct values of `ε(t)` over all augmentations.
    pub t_values: Vec<u32>,
    pub lch_spectrum: Vec<LaurentPoly>,
}

pub fn summarize(d: &Dga) -> Result<AugmentationSummary> {
    let augs = enumerate_augmentations(d)?;
    let mut t_values: Vec<u32> = augs.iter().map(|e| e.t().value()).collect();
    t_values.sort_unstable();
    t_values.dedup();
    Ok(AugmentationSummary {
        q: d.field().order(),
        count: augs.len(),
        t_values,
        lch_spectrum: spectrum_of(d, &augs)?,
    })
}

#[cfg(test)]
mod tests;
