//! Pin sequences on permutation plots.
//!
//! Entries are `(index, value)` points. Each pin from the third on lies outside
//! the bounding box of the earlier pins and slices it: its index or its value
//! falls strictly inside the box's span.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invgraph::inversion_graph;
use crate::perm::{is_simple, Permutation};
use crate::prime::is_chain;

pub type Point = (usize, usize);

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Left,
    Right,
    Up,
    Down,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Direction::Left => "left",
            Direction::Right => "right",
            Direction::Up => "up",
            Direction::Down => "down",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Rect {
    x0: usize,
    x1: usize,
    y0: usize,
    y1: usize,
}

impl Rect {
    fn of(points: &[Point]) -> Rect {
        let mut r = Rect { x0: usize::MAX, x1: 0, y0: usize::MAX, y1: 0 };
        for &(x, y) in points {
            r.x0 = r.x0.min(x);
            r.x1 = r.x1.max(x);
            r.y0 = r.y0.min(y);
            r.y1 = r.y1.max(y);
        }
        r
    }

    fn contains(&self, (x, y): Point) -> bool {
        (self.x0..=self.x1).contains(&x) && (self.y0..=self.y1).contains(&y)
    }

    /// The side of the box that `p` slices, if it does.
    fn sliced_by(&self, p: Point) -> Option<Direction> {
        if self.contains(p) {
            return None;
        }
        let (x, y) = p;
        if self.x0 < x && x < self.x1 {
            Some(if y > self.y1 { Direction::Up } else { Direction::Down })
        } else if self.y0 < y && y < self.y1 {
            Some(if x > self.x1 { Direction::Right } else { Direction::Left })
        } else {
            None
        }
    }

    /// Some vertical or horizontal line through `q` has `p` strictly on one side
    /// and the whole box strictly on the other.
    fn separates(&self, p: Point, q: Point) -> bool {
        let between =
            |a: usize, lo: usize, hi: usize, c: usize| (a > hi && hi < c && c < a) || (a < lo && a < c && c < lo);
        between(p.0, self.x0, self.x1, q.0) || between(p.1, self.y0, self.y1, q.1)
    }

    fn is_full(&self, n: usize) -> bool {
        *self == Rect { x0: 1, x1: n, y0: 1, y1: n }
    }
}

/// Points on a host permutation, in pin order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PinSequence {
    pub host: Permutation,
    #[serde(rename = "pins")]
    pub points: Vec<Point>,
}

impl PinSequence {
    pub fn new(host: Permutation, points: Vec<Point>) -> Result<Self> {
        for &(i, v) in &points {
            if i == 0 || i > host.len() || host.at(i) != v {
                return Err(Error::Precondition(format!("({i},{v}) is not an entry of {host}")));
            }
        }
        Ok(PinSequence { host, points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Directions of `p_3, p_4, ...`, or `None` if some pin fails to slice.
    pub fn directions(&self) -> Option<Vec<Direction>> {
        let pts = &self.points;
        let mut seen = std::collections::HashSet::new();
        if !pts.iter().all(|p| seen.insert(*p)) {
            return None;
        }
        (2..pts.len()).map(|i| Rect::of(&pts[..i]).sliced_by(pts[i])).collect()
    }

    /// Value labels, the vertices of the inversion graph.
    pub fn values(&self) -> Vec<usize> {
        self.points.iter().map(|p| p.1).collect()
    }
}

pub fn validate_pin_sequence(s: &PinSequence) -> bool {
    s.directions().is_some()
}

/// A pin sequence in which each `p_{i+1}` (`i >= 2`) lies strictly between `p_i`
/// and the box of `p_1..p_{i-1}` in one coordinate.
pub fn is_proper(s: &PinSequence) -> bool {
    if !validate_pin_sequence(s) {
        return false;
    }
    let pts = &s.points;
    (1..pts.len().saturating_sub(1)).all(|i| Rect::of(&pts[..i]).separates(pts[i], pts[i + 1]))
}

/// A proper pin sequence starting `x, y` and ending at `z`.
///
/// First extend `x, y` greedily until the box covers the whole plot, which
/// simplicity guarantees. Then walk backwards from `z`: take the earliest pin
/// sequence prefix that the current target slices, and make its last pin the
/// new target, until that prefix is just `x, y`.
pub fn find_reaching_proper_pin_sequence(p: &Permutation, x: Point, y: Point, z: Point) -> Result<PinSequence> {
    let n = p.len();
    let entry = |q: Point| q.0 >= 1 && q.0 <= n && p.at(q.0) == q.1;
    if !entry(x) || !entry(y) || !entry(z) || x == y {
        return Err(Error::Precondition("x, y, z must be entries, x != y".into()));
    }
    if !is_simple(p) {
        return Err(Error::Precondition(format!("{p} is not simple")));
    }
    if Rect::of(&[x, y]).contains(z) {
        return Err(Error::Precondition("z lies in the box of x and y".into()));
    }

    let mut full = vec![x, y];
    loop {
        let r = Rect::of(&full);
        if r.is_full(n) {
            break;
        }
        let next = (1..=n).map(|i| (i, p.at(i))).find(|&q| r.sliced_by(q).is_some());
        match next {
            Some(q) => full.push(q),
            // Only possible for non-simple hosts.
            None => return Err(Error::Precondition("pin sequence got stuck".into())),
        }
    }

    let mut tail = vec![z];
    let mut target = z;
    loop {
        let j = (2..=full.len())
            .find(|&j| Rect::of(&full[..j]).sliced_by(target).is_some())
            .expect("every entry slices some prefix box");
        if j == 2 {
            break;
        }
        target = full[j - 1];
        tail.push(target);
    }
    tail.reverse();
    let mut points = vec![x, y];
    points.extend(tail);
    PinSequence::new(p.clone(), points)
}

/// Value labels of a proper pin sequence; they form a chain in the host's
/// inversion graph.
pub fn pins_to_chain(s: &PinSequence) -> Result<Vec<usize>> {
    if !is_proper(s) {
        return Err(Error::Precondition("pin sequence is not proper".into()));
    }
    let chain = s.values();
    debug_assert!(is_chain(&inversion_graph(&s.host), &chain));
    Ok(chain)
}
