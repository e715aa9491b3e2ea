//! Front diagrams as event lists, and the v1 text format.
//!
//! A front is read left to right as a sequence of events. Strand positions
//! are 1-based and counted from the top of the current vertical slice.
//!
//! ```text
//! knot trefoil
//! L 1      # left cusp creating strands 1 and 2
//! L 3
//! X 2      # crossing of strands 2 and 3
//! X 2
//! X 2
//! R 1      # right cusp joining strands 1 and 2
//! R 1
//! ```
//!
//! A `* i` line places the base point on strand `i`. When none is given the
//! parser puts one on strand 1 directly after the last left cusp.

use std::fmt::Write as _;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Event {
    LeftCusp(usize),
    Cross(usize),
    RightCusp(usize),
    BasePoint(usize),
}

impl Event {
    /// 1-based strand index carried by the event.
    pub fn index(self) -> usize {
        match self {
            Event::LeftCusp(i) | Event::Cross(i) | Event::RightCusp(i) | Event::BasePoint(i) => i,
        }
    }

    /// 0-based position of the (upper) strand touched by the event.
    pub fn pos(self) -> usize {
        self.index() - 1
    }

    fn kind_name(self) -> &'static str {
        match self {
            Event::LeftCusp(_) => "LeftCusp",
            Event::Cross(_) => "Cross",
            Event::RightCusp(_) => "RightCusp",
            Event::BasePoint(_) => "BasePoint",
        }
    }

    fn tag(self) -> char {
        match self {
            Event::LeftCusp(_) => 'L',
            Event::Cross(_) => 'X',
            Event::RightCusp(_) => 'R',
            Event::BasePoint(_) => '*',
        }
    }
}

/// A validated single-component front with exactly one base point.
#[derive(Debug, Clone, Eq)]
pub struct FrontDiagram {
    name: String,
    events: Vec<Event>,
    base_point_auto: bool,
}

impl PartialEq for FrontDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.events == other.events
    }
}

impl FrontDiagram {
    /// Validates `events`; inserts a base point when none is present.
    pub fn new(name: impl Into<String>, mut events: Vec<Event>) -> Result<Self> {
        let base_points = events.iter().filter(|e| matches!(e, Event::BasePoint(_))).count();
        if base_points > 1 {
            return Err(Error::BasePoints(base_points));
        }
        check_strand_profile(&events)?;
        let mut base_point_auto = false;
        if base_points == 0 {
            let last_left = events
                .iter()
                .rposition(|e| matches!(e, Event::LeftCusp(_)))
                .ok_or_else(|| Error::OutOfRange { event: 0, message: "front has no left cusp".into() })?;
            events.insert(last_left + 1, Event::BasePoint(1));
            base_point_auto = true;
        }
        let components = count_components(&events);
        if components != 1 {
            return Err(Error::MultiComponent(components));
        }
        Ok(FrontDiagram { name: name.into(), events, base_point_auto })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    /// Whether the parser chose the base point location.
    pub fn base_point_auto(&self) -> bool {
        self.base_point_auto
    }

    /// Strand count in each gap: entry `g` is the count after event `g - 1`.
    pub fn strand_counts(&self) -> Vec<usize> {
        strand_profile(&self.events)
    }

    pub fn num_crossings(&self) -> usize {
        self.events.iter().filter(|e| matches!(e, Event::Cross(_))).count()
    }

    pub fn num_right_cusps(&self) -> usize {
        self.events.iter().filter(|e| matches!(e, Event::RightCusp(_))).count()
    }

    /// `(event index, 0-based position)` of the base point.
    pub fn base_point(&self) -> (usize, usize) {
        self.events
            .iter()
            .enumerate()
            .find_map(|(i, e)| match e {
                Event::BasePoint(_) => Some((i, e.pos())),
                _ => None,
            })
            .expect("validated front has a base point")
    }

    /// Serializes to the v1 text format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if !self.name.is_empty() {
            let _ = writeln!(out, "knot {}", self.name);
        }
        for e in &self.events {
            let _ = writeln!(out, "{} {}", e.tag(), e.index());
        }
        out
    }
}

fn strand_profile(events: &[Event]) -> Vec<usize> {
    let mut counts = vec![0usize];
    let mut cur = 0usize;
    for e in events {
        match e {
            Event::LeftCusp(_) => cur += 2,
            Event::RightCusp(_) => cur = cur.saturating_sub(2),
            _ => {}
        }
        counts.push(cur);
    }
    counts
}

fn check_strand_profile(events: &[Event]) -> Result<()> {
    let mut cur = 0usize;
    for (n, &e) in events.iter().enumerate() {
        let i = e.index();
        let bad = |what: &str| Error::OutOfRange {
            event: n + 1,
            message: format!("{} index out of range: {i} ({what}; {cur} strands present)", e.kind_name()),
        };
        match e {
            Event::LeftCusp(_) => {
                if i < 1 || i > cur + 1 {
                    return Err(bad("need 1 <= i <= strands + 1"));
                }
                cur += 2;
            }
            Event::Cross(_) | Event::RightCusp(_) => {
                if i < 1 || i + 1 > cur {
                    return Err(bad("need strands i and i+1"));
                }
                if matches!(e, Event::RightCusp(_)) {
                    cur -= 2;
                }
            }
            Event::BasePoint(_) => {
                if i < 1 || i > cur {
                    return Err(bad("need 1 <= i <= strands"));
                }
            }
        }
    }
    if cur != 0 {
        return Err(Error::OutOfRange {
            event: events.len(),
            message: format!("front ends with {cur} open strands"),
        });
    }
    Ok(())
}

/// Union-find over strand segments, following the knot through crossings.
fn count_components(events: &[Event]) -> usize {
    let seg = SegmentIndex::new(events);
    let mut uf = UnionFind::new(seg.total);
    for (e, &ev) in events.iter().enumerate() {
        let left = seg.count(e);
        match ev {
            Event::LeftCusp(_) => {
                let k = ev.pos();
                uf.union(seg.id(e + 1, k), seg.id(e + 1, k + 1));
                for p in 0..left {
                    let np = if p >= k { p + 2 } else { p };
                    uf.union(seg.id(e, p), seg.id(e + 1, np));
                }
            }
            Event::RightCusp(_) => {
                let k = ev.pos();
                uf.union(seg.id(e, k), seg.id(e, k + 1));
                for p in (0..left).filter(|&p| p != k && p != k + 1) {
                    let np = if p > k + 1 { p - 2 } else { p };
                    uf.union(seg.id(e, p), seg.id(e + 1, np));
                }
            }
            Event::Cross(_) => {
                let k = ev.pos();
                for p in 0..left {
                    let np = if p == k {
                        k + 1
                    } else if p == k + 1 {
                        k
                    } else {
                        p
                    };
                    uf.union(seg.id(e, p), seg.id(e + 1, np));
                }
            }
            Event::BasePoint(_) => {
                for p in 0..left {
                    uf.union(seg.id(e, p), seg.id(e + 1, p));
                }
            }
        }
    }
    uf.roots()
}

/// Dense ids for `(gap, position)` strand segments.
#[derive(Debug, Clone)]
pub(crate) struct SegmentIndex {
    offsets: Vec<usize>,
    counts: Vec<usize>,
    pub(crate) total: usize,
}

impl SegmentIndex {
    pub(crate) fn new(events: &[Event]) -> Self {
        let counts = strand_profile(events);
        let mut offsets = Vec::with_capacity(counts.len());
        let mut total = 0;
        for &c in &counts {
            offsets.push(total);
            total += c;
        }
        SegmentIndex { offsets, counts, total }
    }

    pub(crate) fn count(&self, gap: usize) -> usize {
        self.counts[gap]
    }

    pub(crate) fn id(&self, gap: usize, pos: usize) -> usize {
        debug_assert!(pos < self.counts[gap]);
        self.offsets[gap] + pos
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    pub(crate) fn roots(&mut self) -> usize {
        (0..self.parent.len()).filter(|&x| self.find(x) == x).count()
    }
}

/// Parses the v1 front format. `/` may be used in place of a newline.
pub fn parse_front(text: &str) -> Result<FrontDiagram> {
    let mut name = String::new();
    let mut events = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        for chunk in line.split('/') {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse { line: lineno + 1, message };
            let mut parts = chunk.split_whitespace();
            let tag = parts.next().unwrap_or_default();
            if tag == "knot" {
                let rest: Vec<&str> = parts.collect();
                if rest.is_empty() {
                    return Err(err("`knot` header needs a name".into()));
                }
                name = rest.join(" ");
                continue;
            }
            let idx = parts.next().ok_or_else(|| err(format!("`{chunk}`: missing strand index")))?;
            if let Some(extra) = parts.next() {
                return Err(err(format!("`{chunk}`: unexpected token `{extra}`")));
            }
            let i: usize = idx.parse().map_err(|_| err(format!("`{idx}` is not a positive integer")))?;
            if i == 0 {
                return Err(err("strand indices start at 1".into()));
            }
            let event = match tag {
                "L" => Event::LeftCusp(i),
                "X" => Event::Cross(i),
                "R" => Event::RightCusp(i),
                "*" => Event::BasePoint(i),
                other => return Err(err(format!("unknown event `{other}`"))),
            };
            events.push(event);
        }
    }
    if events.is_empty() {
        return Err(Error::Parse { line: 0, message: "no events".into() });
    }
    FrontDiagram::new(name, events)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const TREFOIL: &str = "L 1 / L 3 / X 2 / X 2 / X 2 / R 1 / R 1";

    #[test]
    fn smallest_front_is_the_unknot() {
        let d = parse_front("L 1 / R 1").unwrap();
        assert_eq!(d.num_right_cusps(), 1);
        assert_eq!(d.num_crossings(), 0);
        assert!(d.base_point_auto());
        assert_eq!(d.events()[1], Event::BasePoint(1));
    }

    #[test]
    fn trefoil_counts() {
        let d = parse_front(TREFOIL).unwrap();
        assert_eq!(d.num_crossings(), 3);
        assert_eq!(d.num_right_cusps(), 2);
        assert_eq!(d.base_point(), (2, 0));
        assert_eq!(d.strand_counts(), vec![0, 2, 4, 4, 4, 4, 4, 2, 0]);
    }

    #[test]
    fn right_cusp_out_of_range() {
        let err = parse_front("L 1 / R 2").unwrap_err();
        match err {
            Error::OutOfRange { event, message } => {
                assert_eq!(event, 2);
                assert!(message.starts_with("RightCusp index out of range"), "{message}");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rejects_links_and_extra_base_points() {
        assert_eq!(parse_front("L 1 / L 3 / R 1 / R 1").unwrap_err(), Error::MultiComponent(2));
        assert_eq!(parse_front("L 1 / * 1 / * 2 / R 1").unwrap_err(), Error::BasePoints(2));
    }

    #[test]
    fn malformed_lines() {
        assert!(matches!(parse_front("L"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_front("Q 1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_front("L x"), Err(Error::Parse { .. })));
        assert!(matches!(parse_front("L 0 / R 1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_front("L 1 2 / R 1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_front("# nothing"), Err(Error::Parse { .. })));
        assert!(matches!(parse_front("L 1 / X 1"), Err(Error::OutOfRange { .. })));
        assert!(matches!(parse_front("L 1"), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn header_comments_and_explicit_base_point() {
        let d = parse_front("knot my knot\n# comment\nL 1\n* 2  # lower strand\nR 1\n").unwrap();
        assert_eq!(d.name(), "my knot");
        assert!(!d.base_point_auto());
        assert_eq!(d.base_point(), (1, 1));
    }

    #[test]
    fn text_roundtrip() {
        let d = parse_front(&format!("knot trefoil / {TREFOIL}")).unwrap();
        let again = parse_front(&d.to_text()).unwrap();
        assert_eq!(again, d);
        assert_eq!(again.events(), d.events());
    }
}
