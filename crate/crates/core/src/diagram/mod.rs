//! Legendrian fronts: parsing, classical invariants, resolution.

mod front;
mod invariants;
mod resolve;

pub use front::{parse_front, Event, FrontDiagram};
pub use invariants::{maslov, rotation, tb, MaslovPotential, Traversal};
pub use resolve::{resolve, Chord, ChordKind, ResolvedDiagram};
