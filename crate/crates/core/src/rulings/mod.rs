//! Normal rulings, the ruling polynomial and homotopy cardinality.

use serde::Serialize;

use crate::algebra::{LaurentPoly, QSqrt};
use crate::diagram::{maslov, rotation, tb, Event, FrontDiagram, MaslovPotential};
use crate::error::{Error, Result};

/// A normal ruling, recorded by its switches and the matching of strand
/// positions after every event.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Ruling {
    /// Event indices of the switched crossings, increasing.
    pub switches: Vec<usize>,
    /// `trace[e][p]` is the partner of position `p` after event `e`.
    pub trace: Vec<Vec<usize>>,
}

impl Ruling {
    /// `#switches − #right cusps`.
    pub fn exponent(&self, front: &FrontDiagram) -> i64 {
        self.switches.len() as i64 - front.num_right_cusps() as i64
    }
}

/// Whether a switch is allowed at crossing `(k, k+1)` when `k` is paired
/// with `a` and `k + 1` with `b`: the two companion pairs must be disjoint
/// or nested.
pub fn switch_is_normal(k: usize, a: usize, b: usize) -> bool {
    (a < k && b > k + 1) || (a > b && b > k + 1) || (b < a && a < k)
}

struct Sweep<'a> {
    events: &'a [Event],
    mu: Option<MaslovPotential>,
    out: Vec<Ruling>,
}

impl Sweep<'_> {
    fn run(&mut self, e: usize, partner: Vec<usize>, switches: &mut Vec<usize>, trace: &mut Vec<Vec<usize>>) {
        if e == self.events.len() {
            self.out.push(Ruling { switches: switches.clone(), trace: trace.clone() });
            return;
        }
        let ev = self.events[e];
        let k = ev.pos();
        let mut step = |this: &mut Self, next: Vec<usize>, switches: &mut Vec<usize>| {
            trace.push(next.clone());
            this.run(e + 1, next, switches, trace);
            trace.pop();
        };
        match ev {
            Event::LeftCusp(_) => {
                let shift = |p: usize| if p >= k { p + 2 } else { p };
                let mut next: Vec<usize> = Vec::with_capacity(partner.len() + 2);
                next.extend(partner[..k].iter().map(|&p| shift(p)));
                next.push(k + 1);
                next.push(k);
                next.extend(partner[k..].iter().map(|&p| shift(p)));
                step(self, next, switches);
            }
            Event::RightCusp(_) => {
                if partner[k] != k + 1 {
                    return;
                }
                let shift = |p: usize| if p > k + 1 { p - 2 } else { p };
                let next: Vec<usize> =
                    partner.iter().enumerate().filter(|&(i, _)| i != k && i != k + 1).map(|(_, &p)| shift(p)).collect();
                step(self, next, switches);
            }
            Event::BasePoint(_) => step(self, partner, switches),
            Event::Cross(_) => {
                let (a, b) = (partner[k], partner[k + 1]);
                if a == k + 1 {
                    return;
                }
                let swap = |p: usize| if p == k { k + 1 } else if p == k + 1 { k } else { p };
                let mut crossed: Vec<usize> = partner.iter().map(|&p| swap(p)).collect();
                crossed.swap(k, k + 1);
                step(self, crossed, switches);
                let graded_ok = self.mu.as_ref().is_none_or(|mu| mu.at(e, k) == mu.at(e, k + 1));
                if graded_ok && switch_is_normal(k, a, b) {
                    switches.push(e);
                    step(self, partner, switches);
                    switches.pop();
                }
            }
        }
    }
}

/// Graded normal rulings (switches only where the Maslov potentials of the
/// two strands agree), in a deterministic order.
pub fn enumerate_rulings(front: &FrontDiagram) -> Result<Vec<Ruling>> {
    enumerate(front, true)
}

/// Normal rulings without the grading condition.
pub fn enumerate_ungraded_rulings(front: &FrontDiagram) -> Result<Vec<Ruling>> {
    enumerate(front, false)
}

fn enumerate(front: &FrontDiagram, graded: bool) -> Result<Vec<Ruling>> {
    let mu = if graded { Some(maslov(front)?) } else { None };
    let mut sweep = Sweep { events: front.events(), mu, out: Vec::new() };
    sweep.run(0, Vec::new(), &mut Vec::new(), &mut Vec::new());
    Ok(sweep.out)
}

/// `Σ_R z^{#switches − #right cusps}`.
pub fn polynomial_of(front: &FrontDiagram, rulings: &[Ruling]) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for r in rulings {
        p.add_term(1, r.exponent(front));
    }
    p
}

pub fn ruling_polynomial(front: &FrontDiagram) -> Result<LaurentPoly> {
    Ok(polynomial_of(front, &enumerate_rulings(front)?))
}

/// `q^{tb/2} · R(q^{1/2} − q^{−1/2})`, required to be rational.
pub fn homotopy_cardinality(front: &FrontDiagram, q: u32) -> Result<QSqrt> {
    cardinality_from(&ruling_polynomial(front)?, tb(front), q)
}

pub fn cardinality_from(r: &LaurentPoly, tb: i64, q: u32) -> Result<QSqrt> {
    let v = QSqrt::sqrt(q).pow(tb)?.mul(&r.eval(&QSqrt::ruling_point(q))?);
    if !v.is_rational() {
        return Err(Error::Invariant(format!("homotopy cardinality {v} is not rational")));
    }
    Ok(v)
}

/// Ruling data for reports.
#[derive(Debug, Clone, Serialize)]
pub struct RulingSummary {
    pub count: usize,
    pub polynomial: String,
    pub graded: bool,
    pub evaluations: Vec<RulingEvaluation>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RulingEvaluation {
    pub q: u32,
    /// `R(q^{1/2} − q^{−1/2})` in `ℚ(√q)`.
    pub value: String,
    /// Absent in ungraded mode or when the rotation number is nonzero.
    pub homotopy_cardinality: Option<String>,
}

pub fn summarize(front: &FrontDiagram, qs: &[u32], graded: bool) -> Result<RulingSummary> {
    let rulings = enumerate(front, graded)?;
    let poly = polynomial_of(front, &rulings);
    let mut evaluations = Vec::new();
    for &q in qs {
        let value = poly.eval(&QSqrt::ruling_point(q))?;
        let hc = if graded && rotation(front) == 0 { Some(cardinality_from(&poly, tb(front), q)?.to_string()) } else { None };
        evaluations.push(RulingEvaluation { q, value: value.to_string(), homotopy_cardinality: hc });
    }
    Ok(RulingSummary { count: rulings.len(), polynomial: poly.display_in("z"), graded, evaluations })
}
