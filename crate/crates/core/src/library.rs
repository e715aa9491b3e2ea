//! Built-in plat fronts.

use std::sync::OnceLock;

use crate::diagram::{parse_front, rotation, tb, FrontDiagram};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct KnotLibraryEntry {
    pub name: &'static str,
    pub front_text: &'static str,
    pub tb: i64,
    pub rotation: i64,
    pub note: &'static str,
}

pub const ENTRIES: [KnotLibraryEntry; 5] = [
    KnotLibraryEntry {
        name: "unknot",
        front_text: "L 1\nR 1\n",
        tb: -1,
        rotation: 0,
        note: "standard unknot, one left and one right cusp",
    },
    KnotLibraryEntry {
        name: "trefoil",
        front_text: "L 1\nL 3\nX 2\nX 2\nX 2\nR 1\nR 1\n",
        tb: 1,
        rotation: 0,
        note: "right-handed trefoil, plat closure of sigma_2^3",
    },
    KnotLibraryEntry {
        name: "fig8_tb-3",
        front_text: "L 1\nL 3\nX 2\nX 1\nX 1\nX 1\nX 2\nX 2\nX 2\nR 1\nR 1\n",
        tb: -3,
        rotation: 0,
        note: "figure-eight knot 4_1; knot type checked by its Jones polynomial",
    },
    KnotLibraryEntry {
        name: "k6_1_tb-5",
        front_text: "L 1\nL 3\nX 2\nX 1\nX 1\nX 1\nX 2\nX 2\nX 2\nX 2\nX 2\nR 1\nR 1\n",
        tb: -5,
        rotation: 0,
        note: "stevedore knot 6_1; knot type checked by its Jones polynomial",
    },
    KnotLibraryEntry {
        name: "m9_46_tb-1",
        front_text: "L 1\nL 3\nL 5\nX 2\nX 4\nX 3\nX 3\nX 2\nX 4\nX 3\nX 3\nX 2\nX 4\nR 1\nR 1\nR 1\n",
        tb: -1,
        rotation: 0,
        note: "mirror of the pretzel knot 9_46 = P(-3,3,-3); knot type checked by its Jones polynomial",
    },
];

/// Parsed built-ins, each checked against its recorded tb and rotation.
/// Entries failing the check are withheld.
pub fn builtins() -> &'static [(KnotLibraryEntry, FrontDiagram)] {
    static CELL: OnceLock<Vec<(KnotLibraryEntry, FrontDiagram)>> = OnceLock::new();
    CELL.get_or_init(|| ENTRIES.iter().filter_map(|e| validate(e).ok().map(|d| (e.clone(), d))).collect())
}

/// Parses an entry and compares its invariants with the recorded values.
pub fn validate(entry: &KnotLibraryEntry) -> Result<FrontDiagram> {
    let text = format!("knot {}\n{}", entry.name, entry.front_text);
    let d = parse_front(&text)?;
    let (t, r) = (tb(&d), rotation(&d));
    if t != entry.tb || r != entry.rotation {
        return Err(Error::Invariant(format!(
            "built-in {} has tb {t}, r {r}; recorded tb {}, r {}",
            entry.name, entry.tb, entry.rotation
        )));
    }
    Ok(d)
}

/// Looks up a built-in by name.
pub fn builtin(name: &str) -> Result<FrontDiagram> {
    builtins()
        .iter()
        .find(|(e, _)| e.name == name)
        .map(|(_, d)| d.clone())
        .ok_or_else(|| Error::UnknownKnot(name.to_string()))
}
