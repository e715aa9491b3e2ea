//! Reeb chords of the resolved front with their gradings.

use serde::Serialize;

use super::front::{Event, FrontDiagram};
use super::invariants::{maslov, rotation, tb, MaslovPotential, Traversal};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChordKind {
    Crossing,
    RightCusp,
}

/// A Reeb chord: a front crossing or a right cusp.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Chord {
    pub name: String,
    pub kind: ChordKind,
    /// Index into the front's event list.
    pub event: usize,
    /// 0-based position of the upper strand at the event.
    pub pos: usize,
    pub degree: i64,
}

/// A front together with its chords, gradings and orientation data.
#[derive(Debug, Clone)]
pub struct ResolvedDiagram {
    front: FrontDiagram,
    chords: Vec<Chord>,
    traversal: Traversal,
    maslov: MaslovPotential,
    tb: i64,
}

impl ResolvedDiagram {
    pub fn front(&self) -> &FrontDiagram {
        &self.front
    }

    /// Chords in event order. Crossings are named `a1, a2, …` and right
    /// cusps `b1, b2, …`.
    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    pub fn tb(&self) -> i64 {
        self.tb
    }

    pub fn traversal(&self) -> &Traversal {
        &self.traversal
    }

    pub fn maslov(&self) -> &MaslovPotential {
        &self.maslov
    }

    /// Chord id at event `e`, if the event is a crossing or right cusp.
    pub fn chord_at(&self, e: usize) -> Option<usize> {
        self.chords.binary_search_by_key(&e, |c| c.event).ok()
    }
}

/// Builds the resolved diagram; requires rotation number 0.
pub fn resolve(front: &FrontDiagram) -> Result<ResolvedDiagram> {
    let r = rotation(front);
    if r != 0 {
        return Err(Error::NoMaslovPotential(r));
    }
    let mu = maslov(front)?;
    let traversal = Traversal::new(front);
    let mut chords = Vec::new();
    let (mut na, mut nb) = (0, 0);
    for (e, &ev) in front.events().iter().enumerate() {
        let k = ev.pos();
        match ev {
            Event::Cross(_) => {
                na += 1;
                chords.push(Chord {
                    name: format!("a{na}"),
                    kind: ChordKind::Crossing,
                    event: e,
                    pos: k,
                    degree: mu.at(e, k) - mu.at(e, k + 1),
                });
            }
            Event::RightCusp(_) => {
                nb += 1;
                chords.push(Chord { name: format!("b{nb}"), kind: ChordKind::RightCusp, event: e, pos: k, degree: 1 });
            }
            _ => {}
        }
    }
    Ok(ResolvedDiagram { front: front.clone(), chords, traversal, maslov: mu, tb: tb(front) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_front;

    #[test]
    fn trefoil_degrees() {
        let d = parse_front("L 1 / L 3 / X 2 / X 2 / X 2 / R 1 / R 1").unwrap();
        let r = resolve(&d).unwrap();
        let mut degs: Vec<i64> = r.chords().iter().map(|c| c.degree).collect();
        degs.sort();
        assert_eq!(degs, vec![0, 0, 0, 1, 1]);
        assert_eq!(r.chords()[0].name, "a1");
        assert_eq!(r.chords()[3].name, "b1");
        assert_eq!(r.chord_at(3), Some(0));
        assert_eq!(r.chord_at(2), None);
    }

    #[test]
    fn euler_characteristic_of_chords_is_tb() {
        for text in [
            "L 1 / R 1",
            "L 1 / L 3 / X 2 / X 2 / X 2 / R 1 / R 1",
            "L 1 / L 3 / X 2 / X 1 / X 1 / X 1 / X 2 / X 2 / X 2 / R 1 / R 1",
        ] {
            let r = resolve(&parse_front(text).unwrap()).unwrap();
            let chi: i64 = r.chords().iter().map(|c| if c.degree.rem_euclid(2) == 0 { 1 } else { -1 }).sum();
            assert_eq!(chi, r.tb(), "{text}");
        }
    }
}
