//! Admissible disks of a resolved front, found by a left-to-right sweep.
//!
//! A disk is born at a left cusp, where its upper and lower boundary paths
//! start on the two new strands. Both paths move right. At a crossing a path
//! either follows its strand or turns the corner (a negative corner). The
//! disk ends at its positive corner: a crossing entered from the left
//! quadrant, or a right cusp joining the two paths.

use rayon::prelude::*;

use crate::algebra::{Letter, Word};
use crate::diagram::{ChordKind, Event, ResolvedDiagram};
use crate::error::{Error, Result};

/// Default bound on live partial disks during one sweep.
pub const DEFAULT_DISK_CAP: usize = 1 << 20;

/// One admissible disk.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DiskCount {
    /// Chord id of the positive corner.
    pub positive: usize,
    /// Boundary word read counterclockwise from the positive corner.
    pub word: Word,
    /// `true` when the orientation sign is −1.
    pub negative: bool,
}

/// Quadrants at an even-degree crossing whose corners carry a minus sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct SignRule {
    pub left: bool,
    pub top: bool,
    pub bottom: bool,
}

/// Negative top and left quadrants: the two quadrants on one side of the
/// strand of smaller slope.
pub(crate) const SIGN_RULE: SignRule = SignRule { left: true, top: true, bottom: false };

#[derive(Debug, Clone)]
struct Partial {
    upper: usize,
    lower: usize,
    /// Corners and base points of the upper path, left to right.
    up: Vec<Letter>,
    /// Corners and base points of the lower path, left to right.
    low: Vec<Letter>,
    negative: bool,
}

impl Partial {
    fn finish(self, positive: usize, negative: bool) -> DiskCount {
        let letters = self.up.iter().rev().chain(self.low.iter()).copied();
        DiskCount { positive, word: Word::new(letters), negative: self.negative ^ negative }
    }
}

/// All admissible disks, sorted. The constant disk of each right cusp is
/// included with the empty word.
pub fn enumerate_disks(rd: &ResolvedDiagram) -> Result<Vec<DiskCount>> {
    enumerate_disks_with(rd, SIGN_RULE, DEFAULT_DISK_CAP)
}

pub(crate) fn enumerate_disks_with(rd: &ResolvedDiagram, rule: SignRule, cap: usize) -> Result<Vec<DiskCount>> {
    let events = rd.front().events();
    let starts: Vec<usize> =
        events.iter().enumerate().filter(|(_, e)| matches!(e, Event::LeftCusp(_))).map(|(i, _)| i).collect();
    let per_start: Vec<Result<Vec<DiskCount>>> = starts.par_iter().map(|&s| sweep_from(rd, s, rule, cap)).collect();
    let mut disks = Vec::new();
    for r in per_start {
        disks.extend(r?);
    }
    for (id, c) in rd.chords().iter().enumerate() {
        if c.kind == ChordKind::RightCusp {
            disks.push(DiskCount { positive: id, word: Word::empty(), negative: false });
        }
    }
    disks.sort();
    Ok(disks)
}

fn sweep_from(rd: &ResolvedDiagram, start: usize, rule: SignRule, cap: usize) -> Result<Vec<DiskCount>> {
    let events = rd.front().events();
    let even = |chord: usize| rd.chords()[chord].degree.rem_euclid(2) == 0;
    let k0 = events[start].pos();
    let mut live = vec![Partial { upper: k0, lower: k0 + 1, up: Vec::new(), low: Vec::new(), negative: false }];
    let mut done = Vec::new();
    for (e, &ev) in events.iter().enumerate().skip(start + 1) {
        if live.is_empty() {
            break;
        }
        let k = ev.pos();
        let mut next = Vec::with_capacity(live.len());
        for mut p in live {
            match ev {
                Event::LeftCusp(_) => {
                    if p.upper >= k {
                        p.upper += 2;
                    }
                    if p.lower >= k {
                        p.lower += 2;
                    }
                    next.push(p);
                }
                Event::BasePoint(_) => {
                    if p.upper == k {
                        p.up.push(Letter::Unit(0));
                    }
                    if p.lower == k {
                        p.low.push(Letter::UnitInv(0));
                    }
                    next.push(p);
                }
                Event::RightCusp(_) => {
                    let chord = rd.chord_at(e).expect("right cusp is a chord");
                    if p.upper == k && p.lower == k + 1 {
                        done.push(p.finish(chord, false));
                    } else if [p.upper, p.lower].iter().any(|&x| x == k || x == k + 1) {
                        // the disk would have to fold around the cusp
                    } else {
                        if p.upper > k + 1 {
                            p.upper -= 2;
                        }
                        if p.lower > k + 1 {
                            p.lower -= 2;
                        }
                        next.push(p);
                    }
                }
                Event::Cross(_) => {
                    let chord = rd.chord_at(e).expect("crossing is a chord");
                    let letter = Letter::Gen(chord as u32);
                    let flip = even(chord);
                    if p.upper == k && p.lower == k + 1 {
                        done.push(p.finish(chord, flip && rule.left));
                        continue;
                    }
                    if p.upper == k {
                        p.upper = k + 1;
                        next.push(p);
                    } else if p.upper == k + 1 {
                        let mut turned = p.clone();
                        turned.up.push(letter);
                        turned.negative ^= flip && rule.bottom;
                        next.push(turned);
                        p.upper = k;
                        next.push(p);
                    } else if p.lower == k {
                        let mut turned = p.clone();
                        turned.low.push(letter);
                        turned.negative ^= flip && rule.top;
                        next.push(turned);
                        p.lower = k + 1;
                        next.push(p);
                    } else if p.lower == k + 1 {
                        p.lower = k;
                        next.push(p);
                    } else {
                        next.push(p);
                    }
                }
            }
        }
        if next.len() > cap {
            return Err(Error::DiskSearchCap(cap));
        }
        live = next;
    }
    Ok(done)
}
