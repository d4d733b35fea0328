//! Edge and nonedge reflections.
//!
//! A reflection names a pair `u, v` and a set `X ∋ u, v`. Applying it toggles
//! `uw` and `vw` for every `w ∈ X ∖ {u,v}` and toggles `uv` itself. An edge
//! reflection needs `uv ∈ E` and every other vertex of `X` adjacent to `u` or
//! `v`; a nonedge reflection needs `uv ∉ E` and no other vertex of `X`
//! adjacent to both. The two kinds undo each other.
//!
//! Swapping the entries at an inversion `(i, j)` of a permutation acts on its
//! inversion graph as the edge reflection on `π(i), π(j)` whose set is the
//! entries between them.

mod construct;
mod search;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_cap, Error, Result};
use crate::graph::{bits, SimpleGraph};
use crate::perm::Permutation;

pub use construct::{cyclic_empty, find_induced_cycle, greedy_empty, CyclicEmptying};
pub use search::{
    bfs_to_edgeless, min_edge_edge_cover, nested_triangle_partition, EdgeDistances, NestedBlock, NestedPartition,
    COVER_CAP, EDGE_BFS_CAP, MIXED_BFS_CAP, PARTITION_CAP,
};

pub const LEGAL_CAP: usize = 8;
pub const BRUHAT_CAP: usize = 7;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReflectionKind {
    Edge,
    Nonedge,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Reflection {
    pub u: usize,
    pub v: usize,
    /// Sorted; contains `u` and `v`.
    #[serde(rename = "X")]
    pub x: Vec<usize>,
    pub kind: ReflectionKind,
}

impl Reflection {
    pub fn new(u: usize, v: usize, x: impl IntoIterator<Item = usize>, kind: ReflectionKind) -> Self {
        let mut set: BTreeSet<usize> = x.into_iter().collect();
        set.insert(u);
        set.insert(v);
        Reflection { u, v, x: set.into_iter().collect(), kind }
    }

    /// Just the pair: toggles `uv` and nothing else.
    pub fn pair(u: usize, v: usize, kind: ReflectionKind) -> Self {
        Reflection::new(u, v, [], kind)
    }

    /// The same pair and set with the other kind.
    pub fn inverse(&self) -> Self {
        let kind = match self.kind {
            ReflectionKind::Edge => ReflectionKind::Nonedge,
            ReflectionKind::Nonedge => ReflectionKind::Edge,
        };
        Reflection { kind, ..self.clone() }
    }

    fn others(&self) -> impl Iterator<Item = usize> + '_ {
        self.x.iter().copied().filter(|&w| w != self.u && w != self.v)
    }
}

impl fmt::Display for Reflection {
    /// `t(2,5){1,2,3,5}`, with `~` in front for nonedge reflections.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let set: Vec<String> = self.x.iter().map(|w| w.to_string()).collect();
        let tilde = if self.kind == ReflectionKind::Nonedge { "~" } else { "" };
        write!(f, "{tilde}t({},{}){{{}}}", self.u, self.v, set.join(","))
    }
}

pub fn check_reflection(g: &SimpleGraph, t: &Reflection) -> Result<()> {
    let n = g.n();
    let (u, v) = (t.u, t.v);
    let illegal = |m: String| Err(Error::IllegalReflection(format!("{t}: {m}")));
    if u == v || !(1..=n).contains(&u) || !(1..=n).contains(&v) {
        return illegal("needs two distinct vertices".into());
    }
    if t.x.iter().any(|&w| !(1..=n).contains(&w)) || !t.x.contains(&u) || !t.x.contains(&v) {
        return illegal("set must lie in the graph and contain u and v".into());
    }
    if t.x.windows(2).any(|p| p[0] >= p[1]) {
        return illegal("set must be sorted without repeats".into());
    }
    match t.kind {
        ReflectionKind::Edge => {
            if !g.has_edge(u, v) {
                return illegal("uv is not an edge".into());
            }
            let near = g.neighbor_mask(u) | g.neighbor_mask(v);
            if let Some(w) = t.others().find(|&w| near >> (w - 1) & 1 == 0) {
                return illegal(format!("{w} is adjacent to neither endpoint"));
            }
        }
        ReflectionKind::Nonedge => {
            if g.has_edge(u, v) {
                return illegal("uv is an edge".into());
            }
            let common = g.neighbor_mask(u) & g.neighbor_mask(v);
            if let Some(w) = t.others().find(|&w| common >> (w - 1) & 1 == 1) {
                return illegal(format!("{w} is adjacent to both endpoints"));
            }
        }
    }
    Ok(())
}

pub fn apply_reflection(g: &SimpleGraph, t: &Reflection) -> Result<SimpleGraph> {
    check_reflection(g, t)?;
    let mut h = g.clone();
    for w in t.others() {
        h.toggle_edge(t.u, w);
        h.toggle_edge(t.v, w);
    }
    h.toggle_edge(t.u, t.v);
    Ok(h)
}

/// Every legal reflection of one kind, pairs `u < v` in lexicographic order
/// and then sets by increasing bitmask.
pub fn legal_reflections(g: &SimpleGraph, kind: ReflectionKind) -> Result<Vec<Reflection>> {
    check_cap("legal reflections", g.n(), LEGAL_CAP)?;
    let mut out = Vec::new();
    for_each_legal(g, kind, |u, v, mask| {
        out.push(Reflection::new(u, v, bits(mask), kind));
    });
    Ok(out)
}

/// `f(u, v, extra)` for each legal reflection, `extra` being `X ∖ {u,v}`.
pub(crate) fn for_each_legal(g: &SimpleGraph, kind: ReflectionKind, mut f: impl FnMut(usize, usize, u64)) {
    let all = g.all_mask();
    for u in 1..=g.n() {
        for v in u + 1..=g.n() {
            if g.has_edge(u, v) != (kind == ReflectionKind::Edge) {
                continue;
            }
            let pair = 1 << (u - 1) | 1 << (v - 1);
            let (nu, nv) = (g.neighbor_mask(u), g.neighbor_mask(v));
            let allowed = match kind {
                ReflectionKind::Edge => (nu | nv) & !pair,
                ReflectionKind::Nonedge => all & !pair & !(nu & nv),
            };
            let mut sub = 0u64;
            loop {
                f(u, v, sub);
                sub = sub.wrapping_sub(allowed) & allowed;
                if sub == 0 {
                    break;
                }
            }
        }
    }
}

/// Toggle without checks; `extra` excludes `u` and `v`.
pub(crate) fn apply_unchecked(g: &SimpleGraph, u: usize, v: usize, extra: u64) -> SimpleGraph {
    let mut h = g.clone();
    for w in bits(extra) {
        h.toggle_edge(u, w);
        h.toggle_edge(v, w);
    }
    h.toggle_edge(u, v);
    h
}

/// The edge reflection realising the swap of positions `i < j` of `p`.
pub fn reduction_to_reflection(p: &Permutation, (i, j): (usize, usize)) -> Result<Reflection> {
    if !(1..=p.len()).contains(&i) || !(1..=p.len()).contains(&j) || i >= j || p.at(i) < p.at(j) {
        return Err(Error::Precondition(format!("({i},{j}) is not an inversion of {p}")));
    }
    let strip = (i + 1..j).map(|m| p.at(m));
    Ok(Reflection::new(p.at(i), p.at(j), strip, ReflectionKind::Edge))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BruhatOrder {
    /// Any transposition of positions.
    Strong,
    /// Adjacent positions only.
    Weak,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BruhatDirection {
    /// Towards the identity: fewer inversions.
    Down,
    Up,
}

/// Permutations one swap away in the chosen direction.
pub fn bruhat_neighbors(
    p: &Permutation,
    which: BruhatOrder,
    direction: BruhatDirection,
) -> Result<BTreeSet<Permutation>> {
    let n = p.len();
    check_cap("Bruhat neighbours", n, BRUHAT_CAP)?;
    let mut out = BTreeSet::new();
    for i in 1..=n {
        let js = match which {
            BruhatOrder::Strong => i + 1..n + 1,
            BruhatOrder::Weak => i + 1..(i + 2).min(n + 1),
        };
        for j in js {
            if (p.at(i) > p.at(j)) == (direction == BruhatDirection::Down) {
                out.insert(p.swap_indices(i, j));
            }
        }
    }
    Ok(out)
}

/// Fewest length-decreasing transpositions from `p` to the identity.
pub fn bruhat_distance(p: &Permutation) -> Result<usize> {
    check_cap("Bruhat distance", p.len(), BRUHAT_CAP)?;
    let target = Permutation::identity(p.len());
    let mut seen = BTreeSet::from([p.clone()]);
    let mut queue = VecDeque::from([(p.clone(), 0)]);
    while let Some((q, d)) = queue.pop_front() {
        if q == target {
            return Ok(d);
        }
        for r in bruhat_neighbors(&q, BruhatOrder::Strong, BruhatDirection::Down)? {
            if seen.insert(r.clone()) {
                queue.push_back((r, d + 1));
            }
        }
    }
    unreachable!("the identity is below every permutation")
}

/// Apply a sequence in order.
pub fn replay(g: &SimpleGraph, ts: &[Reflection]) -> Result<SimpleGraph> {
    ts.iter().try_fold(g.clone(), |h, t| apply_reflection(&h, t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invgraph::inversion_graph;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn strip_reflection() {
        let q = p("651324");
        let t = reduction_to_reflection(&q, (2, 5)).unwrap();
        assert_eq!((t.u, t.v, t.x.clone()), (5, 2, vec![1, 2, 3, 5]));
        assert_eq!(apply_reflection(&inversion_graph(&q), &t).unwrap(), inversion_graph(&p("621354")));
        let adj = reduction_to_reflection(&q, (1, 2)).unwrap();
        assert_eq!(adj.x, vec![5, 6]);
        assert!(reduction_to_reflection(&q, (3, 4)).is_err());
    }

    #[test]
    fn diamond_in_one() {
        let d = SimpleGraph::nested_triangle(2);
        let t = Reflection::new(1, 2, [3, 4], ReflectionKind::Edge);
        assert_eq!(apply_reflection(&d, &t).unwrap().edge_count(), 0);
        let back = apply_reflection(&SimpleGraph::empty(4), &t.inverse()).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn legality() {
        let g = SimpleGraph::path(4);
        assert!(apply_reflection(&g, &Reflection::new(1, 2, [4], ReflectionKind::Edge)).is_err());
        assert!(apply_reflection(&g, &Reflection::pair(1, 3, ReflectionKind::Edge)).is_err());
        assert!(apply_reflection(&g, &Reflection::new(1, 3, [2], ReflectionKind::Nonedge)).is_err());
        assert!(apply_reflection(&g, &Reflection::new(1, 3, [4], ReflectionKind::Nonedge)).is_ok());
        let toggle = apply_reflection(&g, &Reflection::pair(2, 3, ReflectionKind::Edge)).unwrap();
        assert_eq!(toggle.edges(), vec![(1, 2), (3, 4)]);
    }

    #[test]
    fn enumerations() {
        assert_eq!(legal_reflections(&SimpleGraph::complete(3), ReflectionKind::Edge).unwrap().len(), 6);
        assert!(legal_reflections(&SimpleGraph::empty(5), ReflectionKind::Edge).unwrap().is_empty());
        // In a long cycle the extra set is any subset of the two outer neighbours.
        let c = SimpleGraph::cycle(7);
        let at12: Vec<_> = legal_reflections(&c, ReflectionKind::Edge)
            .unwrap()
            .into_iter()
            .filter(|t| (t.u, t.v) == (1, 2))
            .map(|t| t.x)
            .collect();
        assert_eq!(at12, vec![vec![1, 2], vec![1, 2, 3], vec![1, 2, 7], vec![1, 2, 3, 7]]);
    }

    #[test]
    fn bruhat() {
        let top = p("321");
        let strong = bruhat_neighbors(&top, BruhatOrder::Strong, BruhatDirection::Down).unwrap();
        assert_eq!(strong, [p("231"), p("312"), p("123")].into());
        let weak = bruhat_neighbors(&top, BruhatOrder::Weak, BruhatDirection::Down).unwrap();
        assert_eq!(weak, [p("231"), p("312")].into());
        assert!(bruhat_neighbors(&p("123"), BruhatOrder::Strong, BruhatDirection::Down).unwrap().is_empty());
        assert_eq!(bruhat_distance(&p("3421")).unwrap(), 3);
        assert_eq!(bruhat_distance(&top).unwrap(), 1);
    }

    #[test]
    fn json() {
        let t = Reflection::new(2, 5, [1, 3], ReflectionKind::Edge);
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"u":2,"v":5,"X":[1,2,3,5],"kind":"edge"}"#);
        assert_eq!(serde_json::from_str::<Reflection>(&s).unwrap(), t);
    }
}
