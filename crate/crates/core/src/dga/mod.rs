//! The Chekanov–Eliashberg DGA of a resolved front.
//!
//! Generators are the chords of the resolved diagram plus `t, t^-1` from the
//! base point. `Letter::Gen(i)` is chord `i`; `Letter::Unit(0)` is `t`.

mod disks;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{Field, Letter, NcPoly, Word};
use crate::diagram::{ResolvedDiagram, Chord};
use crate::error::Result;

pub use disks::{enumerate_disks, DiskCount, DEFAULT_DISK_CAP};
#[cfg(test)]
use disks::{enumerate_disks_with, SignRule, SIGN_RULE};

/// Name and degree of a generator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Generator {
    pub id: String,
    pub degree: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dga {
    name: String,
    field: Field,
    generators: Vec<Generator>,
    diff: Vec<NcPoly>,
    tb: i64,
}

/// Builds the DGA over `F_q`.
pub fn build_dga(rd: &ResolvedDiagram, q: u32) -> Result<Dga> {
    let field = Field::new(q)?;
    let disks = enumerate_disks(rd)?;
    Ok(Dga::from_disks(rd, field, &disks))
}

impl Dga {
    pub(crate) fn from_disks(rd: &ResolvedDiagram, field: Field, disks: &[DiskCount]) -> Dga {
        let generators: Vec<Generator> =
            rd.chords().iter().map(|c: &Chord| Generator { id: c.name.clone(), degree: c.degree }).collect();
        let mut diff = vec![NcPoly::zero(field); generators.len()];
        for d in disks {
            let c = if d.negative { -field.one() } else { field.one() };
            diff[d.positive].add_term(d.word.clone(), c.value());
        }
        Dga { name: rd.front().name().to_string(), field, generators, diff, tb: rd.tb() }
    }

    /// Assembles a DGA from explicit data; `diff[i]` is the differential of
    /// chord `i`.
    pub fn from_parts(name: impl Into<String>, field: Field, generators: Vec<Generator>, diff: Vec<NcPoly>, tb: i64) -> Dga {
        assert_eq!(generators.len(), diff.len());
        Dga { name: name.into(), field, generators, diff, tb }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Chord generators; `t` and `t^-1` are implicit.
    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn tb(&self) -> i64 {
        self.tb
    }

    pub fn degree(&self, g: usize) -> i64 {
        self.generators[g].degree
    }

    /// Differential of chord `g`.
    pub fn differential(&self, g: usize) -> &NcPoly {
        &self.diff[g]
    }

    pub fn letter_degree(&self, l: Letter) -> i64 {
        match l {
            Letter::Gen(g) => self.degree(g as usize),
            _ => 0,
        }
    }

    pub fn letter_name(&self, l: Letter) -> String {
        match l {
            Letter::Gen(g) => self.generators[g as usize].id.clone(),
            Letter::Unit(_) => "t".into(),
            Letter::UnitInv(_) => "t^-1".into(),
        }
    }

    pub fn display_poly(&self, p: &NcPoly) -> String {
        p.display_with(|l| self.letter_name(l))
    }

    /// Extends `∂` to `p` by the graded Leibniz rule.
    pub fn apply(&self, p: &NcPoly) -> NcPoly {
        let f = self.field;
        let mut out = NcPoly::zero(f);
        for (w, c) in p.terms() {
            let letters = w.letters();
            let mut prefix_degree = 0i64;
            for (j, &l) in letters.iter().enumerate() {
                if let Letter::Gen(g) = l {
                    let sign = if prefix_degree.rem_euclid(2) == 1 { -c } else { c };
                    let left = Word::new(letters[..j].iter().copied());
                    let right = Word::new(letters[j + 1..].iter().copied());
                    for (mid, m) in self.diff[g as usize].terms() {
                        out.add_term(left.concat(mid).concat(&right), (sign * m).value());
                    }
                }
                prefix_degree += self.letter_degree(l);
            }
        }
        out
    }

    /// The same DGA with one chord's differential replaced.
    pub fn with_differential(&self, g: usize, p: NcPoly) -> Dga {
        let mut d = self.clone();
        d.diff[g] = p;
        d
    }

    pub fn to_json(&self) -> DgaJson {
        let mut generators: Vec<Generator> = self.generators.clone();
        generators.push(Generator { id: "t".into(), degree: 0 });
        generators.push(Generator { id: "t^-1".into(), degree: 0 });
        let mut diff = BTreeMap::new();
        for (g, p) in self.diff.iter().enumerate() {
            let terms: Vec<(u32, Vec<String>)> =
                p.terms().map(|(w, c)| (c.value(), w.letters().iter().map(|&l| self.letter_name(l)).collect())).collect();
            diff.insert(self.generators[g].id.clone(), terms);
        }
        diff.insert("t".into(), Vec::new());
        diff.insert("t^-1".into(), Vec::new());
        DgaJson { generators, diff }
    }
}

/// Serialized form: `{generators:[{id,degree}], diff:{id:[[coeff,[letters]]…]}}`.
#[derive(Debug, Clone, Serialize)]
pub struct DgaJson {
    pub generators: Vec<Generator>,
    pub diff: BTreeMap<String, Vec<(u32, Vec<String>)>>,
}

/// Result of the three axiom checks. Failures are listed, not thrown.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DgaReport {
    pub d_squared_zero: bool,
    pub degree_minus_one: bool,
    pub euler_count: i64,
    pub tb: i64,
    pub euler_matches_tb: bool,
    pub failures: Vec<String>,
}

impl DgaReport {
    pub fn passed(&self) -> bool {
        self.d_squared_zero && self.degree_minus_one && self.euler_matches_tb
    }
}

pub fn check_dga(d: &Dga) -> DgaReport {
    let mut failures = Vec::new();
    let mut d2 = true;
    let mut deg = true;
    for (g, gen) in d.generators.iter().enumerate() {
        let sq = d.apply(&d.diff[g]);
        if !sq.is_zero() {
            d2 = false;
            failures.push(format!("d^2({}) = {}", gen.id, d.display_poly(&sq)));
        }
        for w in d.diff[g].terms().map(|(w, _)| w) {
            let wd = w.degree(|x| d.degree(x as usize));
            if wd != gen.degree - 1 {
                deg = false;
                failures.push(format!("term {} of d({}) has degree {wd}, expected {}", d.display_poly(&NcPoly::term(d.field, w.clone(), d.field.one())), gen.id, gen.degree - 1));
            }
        }
    }
    let euler: i64 = d.generators.iter().map(|g| if g.degree.rem_euclid(2) == 0 { 1 } else { -1 }).sum();
    if euler != d.tb {
        failures.push(format!("Euler count {euler} differs from tb {}", d.tb));
    }
    DgaReport {
        d_squared_zero: d2,
        degree_minus_one: deg,
        euler_count: euler,
        tb: d.tb,
        euler_matches_tb: euler == d.tb,
        failures,
    }
}
