//! Necessary conditions for an exact Lagrangian cobordism between two
//! Legendrian knots.
//!
//! A failed test proves no cobordism of the given Euler characteristic
//! exists. Passing every test proves nothing.

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::algebra::{LaurentPoly, QSqrt};
use crate::augment::lch_spectrum;
use crate::diagram::{resolve, rotation, tb, FrontDiagram};
use crate::dga::build_dga;
use crate::error::{Error, Result};
use crate::rulings::ruling_polynomial;

/// Maslov-number-zero, connected cobordism from `minus` to `plus`.
#[derive(Debug, Clone)]
pub struct CobordismHypothesis {
    pub minus: FrontDiagram,
    pub plus: FrontDiagram,
    pub chi: i64,
    pub q_list: Vec<u32>,
}

impl CobordismHypothesis {
    pub fn new(minus: FrontDiagram, plus: FrontDiagram, chi: i64, q_list: Vec<u32>) -> Result<Self> {
        if chi > 0 {
            return Err(Error::Domain(format!("Euler characteristic {chi} is positive")));
        }
        Ok(Self { minus, plus, chi, q_list })
    }

    pub fn with_genus(minus: FrontDiagram, plus: FrontDiagram, genus: u32, q_list: Vec<u32>) -> Result<Self> {
        Self::new(minus, plus, -2 * genus as i64, q_list)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TestRecord {
    pub name: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u32>,
    pub passed: bool,
    pub details: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Obstructed,
    NoObstructionFound,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Obstructed => "OBSTRUCTED",
            Verdict::NoObstructionFound => "NO_OBSTRUCTION_FOUND",
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ObstructionReport {
    pub minus: String,
    pub plus: String,
    pub chi: i64,
    pub tests: Vec<TestRecord>,
    pub verdict: Verdict,
}

impl ObstructionReport {
    pub fn obstructed(&self) -> bool {
        self.verdict == Verdict::Obstructed
    }

    pub fn test(&self, name: &str, q: Option<u32>) -> Option<&TestRecord> {
        self.tests.iter().find(|t| t.name == name && t.q == q)
    }
}

/// `tb(Λ₊) − tb(Λ₋) = −χ`.
pub fn check_tb(h: &CobordismHypothesis) -> TestRecord {
    let (lo, hi) = (tb(&h.minus), tb(&h.plus));
    TestRecord {
        name: "tb",
        q: None,
        passed: hi - lo == -h.chi,
        details: format!("tb(plus) - tb(minus) = {hi} - ({lo}) = {}, -chi = {}", hi - lo, -h.chi),
    }
}

fn spectrum(front: &FrontDiagram, q: u32) -> Result<Vec<LaurentPoly>> {
    if rotation(front) != 0 {
        return Err(Error::Domain(format!("{} has nonzero rotation number", front.name())));
    }
    lch_spectrum(&build_dga(&resolve(front)?, q)?)
}

fn list(ps: &[LaurentPoly]) -> String {
    let items: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
    format!("[{}]", items.join(", "))
}

/// Every `P` in the spectrum of `Λ₋` must reappear as `P + (−χ)` in the
/// spectrum of `Λ₊`.
pub fn check_lch(h: &CobordismHypothesis, q: u32) -> Result<TestRecord> {
    let lo = spectrum(&h.minus, q)?;
    let hi = spectrum(&h.plus, q)?;
    let shift = LaurentPoly::monomial(-h.chi, 0);
    let missing: Vec<LaurentPoly> = lo.iter().map(|p| p.add(&shift)).filter(|p| !hi.contains(p)).collect();
    let details = if lo.is_empty() {
        "vacuous: minus has no augmentations".to_string()
    } else if missing.is_empty() {
        format!("spectrum(minus) + {} = {} is contained in spectrum(plus) = {}", -h.chi, list(&lo.iter().map(|p| p.add(&shift)).collect::<Vec<_>>()), list(&hi))
    } else {
        format!("spectrum(minus) = {}; shifted by {}: {} not in spectrum(plus) = {}", list(&lo), -h.chi, list(&missing), list(&hi))
    };
    Ok(TestRecord { name: "lch", q: Some(q), passed: missing.is_empty(), details })
}

/// `R₋(z_q) ≤ q^{−χ/2} · R₊(z_q)` with `z_q = q^{1/2} − q^{−1/2}`.
pub fn check_ruling(h: &CobordismHypothesis, q: u32) -> Result<TestRecord> {
    if h.chi % 2 != 0 {
        return Err(Error::Domain(format!("ruling test needs even chi, got {}", h.chi)));
    }
    let z = QSqrt::ruling_point(q);
    let (rlo, rhi) = (ruling_polynomial(&h.minus)?, ruling_polynomial(&h.plus)?);
    let lhs = rlo.eval(&z)?;
    let rhs = QSqrt::sqrt(q).pow(-h.chi)?.mul(&rhi.eval(&z)?);
    let passed = lhs <= rhs;
    let details = format!(
        "R_minus = {}, R_plus = {}; R_minus(z_q) = {lhs} {} {q}^{}*R_plus(z_q) = {rhs}",
        rlo.display_in("z"),
        rhi.display_in("z"),
        if passed { "<=" } else { ">" },
        -h.chi / 2,
    );
    Ok(TestRecord { name: "ruling", q: Some(q), passed, details })
}

/// Runs the tb test, then the LCH and ruling tests for every `q`.
pub fn obstruct(h: &CobordismHypothesis) -> Result<ObstructionReport> {
    let mut tests = vec![check_tb(h)];
    let per_q: Vec<Vec<TestRecord>> =
        h.q_list.par_iter().map(|&q| Ok(vec![check_lch(h, q)?, check_ruling(h, q)?])).collect::<Result<_>>()?;
    tests.extend(per_q.into_iter().flatten());
    let verdict = if tests.iter().all(|t| t.passed) { Verdict::NoObstructionFound } else { Verdict::Obstructed };
    Ok(ObstructionReport { minus: h.minus.name().to_string(), plus: h.plus.name().to_string(), chi: h.chi, tests, verdict })
}

#[cfg(test)]
mod tests;
