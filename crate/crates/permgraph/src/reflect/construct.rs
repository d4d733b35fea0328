//! Emptying sequences built directly rather than searched for.

use serde::Serialize;

use super::{apply_reflection, Reflection, ReflectionKind};
use crate::error::{check_cap, Error, Result};
use crate::graph::{bits, SimpleGraph};

pub const CYCLIC_CAP: usize = 10;

fn closed_reflection(g: &SimpleGraph, v: usize, w: usize) -> Reflection {
    Reflection::new(v, w, g.neighbors(v), ReflectionKind::Edge)
}

/// Isolate vertices in order `1, 2, …`: while `v` still has a neighbour `w`
/// (the smallest), reflect `vw` over the closed neighbourhood of `v`. At most
/// `n - 1` steps, since the last vertex is already isolated when reached.
pub fn greedy_empty(g: &SimpleGraph) -> Vec<Reflection> {
    let mut cur = g.clone();
    let mut out = Vec::new();
    for v in 1..=g.n() {
        if let Some(&w) = cur.neighbors(v).first() {
            let t = closed_reflection(&cur, v, w);
            cur = apply_reflection(&cur, &t).expect("closed neighbourhood reflections are legal");
            out.push(t);
        }
    }
    out
}

/// A shortest induced cycle, starting at its least vertex and continuing to
/// the smaller of that vertex's two cycle neighbours; the lexicographically
/// least such listing.
pub fn find_induced_cycle(g: &SimpleGraph) -> Option<Vec<usize>> {
    fn extend(g: &SimpleGraph, path: &mut Vec<usize>, len: usize) -> bool {
        let (s, last) = (path[0], *path.last().unwrap());
        if path.len() == len {
            return g.has_edge(last, s) && path[1] < last;
        }
        let on_path: u64 = path.iter().map(|&x| 1u64 << (x - 1)).sum();
        for w in bits(g.neighbor_mask(last) & !on_path) {
            // Only consecutive path vertices may be adjacent, apart from the
            // closing edge back to s.
            let inner = path.get(1..path.len() - 1).unwrap_or(&[]).iter().any(|&x| g.has_edge(x, w));
            let early_close = path.len() > 1 && g.has_edge(w, s) && path.len() + 1 < len;
            if w < s || inner || early_close {
                continue;
            }
            path.push(w);
            if extend(g, path, len) {
                return true;
            }
            path.pop();
        }
        false
    }
    for len in 3..=g.n() {
        for s in 1..=g.n() {
            let mut path = vec![s];
            if extend(g, &mut path, len) {
                return Some(path);
            }
        }
    }
    None
}

#[derive(Clone, Debug, Serialize)]
pub struct CyclicEmptying {
    pub cycle: Vec<usize>,
    pub reflections: Vec<Reflection>,
    /// Components of `G - C` with an even number of edges to `C`.
    pub k: usize,
    /// `(n - 2) - k`. The sweep does not always reach this, and on some
    /// graphs no sequence does; only `n - 2` is guaranteed.
    pub bound: usize,
}

/// Empty a graph containing a cycle in at most `n - 2` edge reflections.
///
/// With `C = c_1 … c_k` the cycle from [`find_induced_cycle`]: isolate each
/// outside vertex that still has a later outside neighbour; shorten the cycle
/// by isolating `c_1, …, c_{k-3}` in turn; strip degree-one vertices. What is
/// left is a triangle `x y z` plus vertices attached to two or three of its
/// corners, and it is emptied in `|A| + 1` or `|A| + 3` further steps.
pub fn cyclic_empty(g: &SimpleGraph) -> Result<CyclicEmptying> {
    let n = g.n();
    check_cap("cyclic emptying", n, CYCLIC_CAP)?;
    let cycle = find_induced_cycle(g).ok_or_else(|| Error::Precondition("graph has no cycle".into()))?;
    let on_cycle: u64 = cycle.iter().map(|&c| 1u64 << (c - 1)).sum();
    let k = even_components(g, on_cycle);

    let mut cur = g.clone();
    let mut out = Vec::new();
    let mut step = |cur: &mut SimpleGraph, t: Reflection| -> Result<()> {
        *cur = apply_reflection(cur, &t)?;
        out.push(t);
        Ok(())
    };

    let outside: Vec<usize> = bits(g.all_mask() & !on_cycle).collect();
    for (i, &v) in outside.iter().enumerate() {
        if let Some(&w) = outside[i + 1..].iter().find(|&&w| cur.has_edge(v, w)) {
            let t = closed_reflection(&cur, v, w);
            step(&mut cur, t)?;
        }
    }
    let len = cycle.len();
    for i in 0..len - 3 {
        let t = closed_reflection(&cur, cycle[i], cycle[i + 1]);
        step(&mut cur, t)?;
    }
    for &v in &outside {
        if cur.degree(v) == 1 {
            let w = cur.neighbors(v)[0];
            step(&mut cur, Reflection::pair(v, w, ReflectionKind::Edge))?;
        }
    }

    let [x, y, z] = [cycle[len - 3], cycle[len - 2], cycle[len - 1]];
    let nb = |v: usize| cur.neighbor_mask(v);
    let only = |a: usize, b: usize, c: usize| nb(a) & nb(b) & !nb(c) & !(1 << (c - 1));
    let (sx, sy, sz) = (only(y, z, x), only(x, z, y), only(x, y, z));
    let a_set = nb(x) & nb(y) & nb(z);
    let nonempty = [sx, sy, sz].iter().filter(|&&s| s != 0).count();
    let (hub, rest) = if nonempty <= 1 {
        // Reflect the pair opposite the one corner that may carry a set.
        let (p, q, r) = if sy != 0 {
            (y, x, z)
        } else if sz != 0 {
            (z, x, y)
        } else {
            (x, y, z)
        };
        let t = Reflection::new(q, r, bits(nb(q) | nb(r)), ReflectionKind::Edge);
        step(&mut cur, t)?;
        (p, a_set)
    } else {
        step(&mut cur, Reflection::new(y, z, bits(sx | a_set), ReflectionKind::Edge))?;
        step(&mut cur, Reflection::new(x, y, bits(sz), ReflectionKind::Edge))?;
        step(&mut cur, Reflection::new(x, z, bits(sy), ReflectionKind::Edge))?;
        (x, a_set)
    };
    for a in bits(rest) {
        step(&mut cur, Reflection::pair(hub, a, ReflectionKind::Edge))?;
    }
    debug_assert_eq!(cur.edge_count(), 0);
    Ok(CyclicEmptying { cycle, reflections: out, k, bound: (n - 2).saturating_sub(k) })
}

fn even_components(g: &SimpleGraph, on_cycle: u64) -> usize {
    let rest: Vec<usize> = bits(g.all_mask() & !on_cycle).collect();
    g.induced(&rest)
        .component_masks()
        .into_iter()
        .filter(|&comp| {
            let to_cycle: u32 = bits(comp).map(|i| (g.neighbor_mask(rest[i - 1]) & on_cycle).count_ones()).sum();
            to_cycle % 2 == 0
        })
        .count()
}
