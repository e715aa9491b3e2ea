//! Orientation, classical invariants and the Maslov potential.

use std::collections::VecDeque;

use super::front::{Event, FrontDiagram, SegmentIndex, UnionFind};
use crate::error::{Error, Result};

/// Orientation data obtained by walking the knot once from the base point.
///
/// The knot passes the base point moving right to left.
#[derive(Debug, Clone)]
pub struct Traversal {
    seg: SegmentIndex,
    /// `+1` for rightward, `-1` for leftward, per segment id.
    dir: Vec<i8>,
    pub up_cusps: usize,
    pub down_cusps: usize,
}

impl Traversal {
    pub fn new(front: &FrontDiagram) -> Self {
        let events = front.events();
        let seg = SegmentIndex::new(events);
        let mut dir = vec![0i8; seg.total];
        let (bp_event, bp_pos) = front.base_point();
        let start = (bp_event, bp_pos, -1i8);
        let (mut gap, mut pos, mut d) = start;
        let (mut up, mut down) = (0, 0);
        loop {
            dir[seg.id(gap, pos)] = d;
            if d > 0 {
                let ev = events[gap];
                match ev {
                    Event::RightCusp(k1) if pos + 1 == k1 || pos == k1 => {
                        // arrive on one branch, leave on the other
                        let k = ev.pos();
                        if pos == k {
                            down += 1;
                            pos = k + 1;
                        } else {
                            up += 1;
                            pos = k;
                        }
                        d = -1;
                    }
                    _ => {
                        pos = forward_position(ev, pos);
                        gap += 1;
                    }
                }
            } else {
                let ev = events[gap - 1];
                match ev {
                    Event::LeftCusp(k1) if pos + 1 == k1 || pos == k1 => {
                        let k = ev.pos();
                        if pos == k {
                            down += 1;
                            pos = k + 1;
                        } else {
                            up += 1;
                            pos = k;
                        }
                        d = 1;
                    }
                    _ => {
                        pos = backward_position(ev, pos);
                        gap -= 1;
                    }
                }
            }
            if (gap, pos, d) == start {
                break;
            }
        }
        Traversal { seg, dir, up_cusps: up, down_cusps: down }
    }

    /// Direction of the segment at `(gap, pos)`.
    pub fn direction(&self, gap: usize, pos: usize) -> i8 {
        self.dir[self.seg.id(gap, pos)]
    }

    /// Sign of the crossing at event `e`: positive iff both strands are
    /// traversed in the same horizontal direction.
    pub fn crossing_sign(&self, front: &FrontDiagram, e: usize) -> i64 {
        let k = front.events()[e].pos();
        if self.direction(e, k) == self.direction(e, k + 1) {
            1
        } else {
            -1
        }
    }

    pub fn writhe(&self, front: &FrontDiagram) -> i64 {
        front
            .events()
            .iter()
            .enumerate()
            .filter(|(_, e)| matches!(e, Event::Cross(_)))
            .map(|(i, _)| self.crossing_sign(front, i))
            .sum()
    }
}

/// Position after crossing `ev` from its left side.
pub(crate) fn forward_position(ev: Event, pos: usize) -> usize {
    match ev {
        Event::LeftCusp(_) => {
            if pos >= ev.pos() {
                pos + 2
            } else {
                pos
            }
        }
        Event::RightCusp(_) => {
            debug_assert!(pos != ev.pos() && pos != ev.pos() + 1);
            if pos > ev.pos() + 1 {
                pos - 2
            } else {
                pos
            }
        }
        Event::Cross(_) => {
            let k = ev.pos();
            if pos == k {
                k + 1
            } else if pos == k + 1 {
                k
            } else {
                pos
            }
        }
        Event::BasePoint(_) => pos,
    }
}

/// Position after crossing `ev` from its right side.
pub(crate) fn backward_position(ev: Event, pos: usize) -> usize {
    match ev {
        Event::LeftCusp(_) => {
            debug_assert!(pos != ev.pos() && pos != ev.pos() + 1);
            if pos > ev.pos() + 1 {
                pos - 2
            } else {
                pos
            }
        }
        Event::RightCusp(_) => {
            if pos >= ev.pos() {
                pos + 2
            } else {
                pos
            }
        }
        other => forward_position(other, pos),
    }
}

/// Thurston–Bennequin number: writhe minus the number of right cusps.
pub fn tb(front: &FrontDiagram) -> i64 {
    Traversal::new(front).writhe(front) - front.num_right_cusps() as i64
}

/// Rotation number: half of (down cusps − up cusps).
pub fn rotation(front: &FrontDiagram) -> i64 {
    let t = Traversal::new(front);
    (t.down_cusps as i64 - t.up_cusps as i64) / 2
}

/// A Maslov potential on strand segments, constant along arcs between cusps.
#[derive(Debug, Clone)]
pub struct MaslovPotential {
    seg: SegmentIndex,
    values: Vec<i64>,
}

impl MaslovPotential {
    pub fn at(&self, gap: usize, pos: usize) -> i64 {
        self.values[self.seg.id(gap, pos)]
    }
}

/// Solves `μ(upper) = μ(lower) + 1` at every cusp and normalizes the
/// minimum to 0. Fails exactly when the rotation number is nonzero.
pub fn maslov(front: &FrontDiagram) -> Result<MaslovPotential> {
    let events = front.events();
    let seg = SegmentIndex::new(events);
    let mut uf = UnionFind::new(seg.total);
    let mut cusp_pairs = Vec::new();
    for (e, &ev) in events.iter().enumerate() {
        match ev {
            Event::LeftCusp(_) => {
                let k = ev.pos();
                cusp_pairs.push((seg.id(e + 1, k), seg.id(e + 1, k + 1)));
                for p in 0..seg.count(e) {
                    uf.union(seg.id(e, p), seg.id(e + 1, forward_position(ev, p)));
                }
            }
            Event::RightCusp(_) => {
                let k = ev.pos();
                cusp_pairs.push((seg.id(e, k), seg.id(e, k + 1)));
                for p in (0..seg.count(e)).filter(|&p| p != k && p != k + 1) {
                    uf.union(seg.id(e, p), seg.id(e + 1, forward_position(ev, p)));
                }
            }
            _ => {
                for p in 0..seg.count(e) {
                    uf.union(seg.id(e, p), seg.id(e + 1, forward_position(ev, p)));
                }
            }
        }
    }
    let arc: Vec<usize> = (0..seg.total).map(|s| uf.find(s)).collect();
    // constraint graph on arcs: edge (upper, lower) means μ(upper) − μ(lower) = 1
    let mut adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); seg.total];
    for &(upper, lower) in &cusp_pairs {
        let (u, l) = (arc[upper], arc[lower]);
        adj[u].push((l, -1));
        adj[l].push((u, 1));
    }
    let mut val: Vec<Option<i64>> = vec![None; seg.total];
    for root in 0..seg.total {
        if arc[root] != root || val[root].is_some() {
            continue;
        }
        val[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(a) = queue.pop_front() {
            let va = val[a].expect("queued arcs have values");
            for &(b, delta) in &adj[a] {
                match val[b] {
                    None => {
                        val[b] = Some(va + delta);
                        queue.push_back(b);
                    }
                    Some(vb) if vb != va + delta => {
                        return Err(Error::NoMaslovPotential(rotation(front)));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let raw: Vec<i64> = arc.iter().map(|&a| val[a].expect("every arc is reached")).collect();
    let min = raw.iter().copied().min().unwrap_or(0);
    Ok(MaslovPotential { seg, values: raw.into_iter().map(|v| v - min).collect() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_front;

    const TREFOIL: &str = "L 1 / L 3 / X 2 / X 2 / X 2 / R 1 / R 1";
    const FIG8: &str = "L 1 / L 3 / X 2 / X 1 / X 1 / X 1 / X 2 / X 2 / X 2 / R 1 / R 1";
    const SIX_ONE: &str = "L 1 / L 3 / X 2 / X 1 / X 1 / X 1 / X 2 / X 2 / X 2 / X 2 / X 2 / R 1 / R 1";

    #[test]
    fn unknot_invariants() {
        let d = parse_front("L 1 / R 1").unwrap();
        assert_eq!(tb(&d), -1);
        assert_eq!(rotation(&d), 0);
    }

    #[test]
    fn standard_fronts() {
        for (text, want) in [(TREFOIL, 1), (FIG8, -3), (SIX_ONE, -5)] {
            let d = parse_front(text).unwrap();
            assert_eq!(tb(&d), want, "{text}");
            assert_eq!(rotation(&d), 0, "{text}");
        }
    }

    #[test]
    fn base_point_choice_does_not_change_tb() {
        let a = parse_front("L 1 / L 3 / * 3 / X 2 / X 2 / X 2 / R 1 / R 1").unwrap();
        let b = parse_front("L 1 / L 3 / X 2 / X 2 / * 4 / X 2 / R 1 / R 1").unwrap();
        assert_eq!(tb(&a), 1);
        assert_eq!(tb(&b), 1);
    }

    #[test]
    fn stabilized_unknot_has_rotation_and_no_potential() {
        // a zig-zag: no crossings, two cusps on each side
        let d = parse_front("L 1 / L 1 / R 2 / R 1").unwrap();
        assert_eq!(tb(&d), -2);
        assert_eq!(rotation(&d).abs(), 1);
        assert!(matches!(maslov(&d), Err(Error::NoMaslovPotential(_))));
    }

    #[test]
    fn potential_jumps_by_one_at_cusps() {
        let d = parse_front(TREFOIL).unwrap();
        let m = maslov(&d).unwrap();
        // gap 2 has four strands; cusp pairs (0,1) and (2,3)
        assert_eq!(m.at(2, 0), m.at(2, 1) + 1);
        assert_eq!(m.at(2, 2), m.at(2, 3) + 1);
        let all: Vec<i64> = (0..4).map(|p| m.at(2, p)).collect();
        assert_eq!(*all.iter().min().unwrap(), 0);
    }
}
