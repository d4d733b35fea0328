//! Exact reflection distances and the lower and upper bounds around them.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::Serialize;

use super::{apply_unchecked, for_each_legal, Reflection, ReflectionKind};
use crate::error::{check_cap, Result};
use crate::graph::{bits, canonical_form, CanonicalForm, SimpleGraph};

pub const EDGE_BFS_CAP: usize = 8;
pub const MIXED_BFS_CAP: usize = 7;
pub const COVER_CAP: usize = 9;
pub const PARTITION_CAP: usize = 8;

/// Memoised edge-reflection distances to the edgeless graph, keyed by
/// isomorphism class. Edge reflections always remove edges, so the recursion
/// terminates without a visited set.
#[derive(Default)]
pub struct EdgeDistances {
    memo: HashMap<CanonicalForm, usize>,
}

impl EdgeDistances {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn distance(&mut self, g: &SimpleGraph) -> Result<usize> {
        check_cap("edge reflection distance", g.n(), EDGE_BFS_CAP)?;
        self.dist(g)
    }

    fn dist(&mut self, g: &SimpleGraph) -> Result<usize> {
        let m = g.edge_count();
        if m == 0 {
            return Ok(0);
        }
        let key = canonical_form(g)?;
        if let Some(&d) = self.memo.get(&key) {
            return Ok(d);
        }
        let h = key.to_graph();
        // One reflection removes at most 2n - 3 edges.
        let floor = m.div_ceil(2 * g.n() - 3);
        let mut children = Vec::new();
        let mut seen = HashSet::new();
        for_each_legal(&h, ReflectionKind::Edge, |u, v, extra| {
            let c = apply_unchecked(&h, u, v, extra);
            if seen.insert(c.clone()) {
                children.push(c);
            }
        });
        // Fewest edges first: those tend to be closest.
        children.sort_by_key(|c| c.edge_count());
        let mut best = usize::MAX;
        for c in children {
            best = best.min(1 + self.dist(&c)?);
            if best == floor {
                break;
            }
        }
        self.memo.insert(key, best);
        Ok(best)
    }

    /// A shortest sequence for `g` itself: at each step the first legal
    /// reflection (in enumeration order) that lowers the distance by one.
    pub fn witness(&mut self, g: &SimpleGraph) -> Result<Vec<Reflection>> {
        let mut d = self.distance(g)?;
        let mut cur = g.clone();
        let mut out = Vec::with_capacity(d);
        while d > 0 {
            let mut step = None;
            let mut found = Ok(false);
            for_each_legal(&cur, ReflectionKind::Edge, |u, v, extra| {
                if step.is_some() || found.is_err() {
                    return;
                }
                let c = apply_unchecked(&cur, u, v, extra);
                match self.dist(&c) {
                    Ok(x) if x + 1 == d => step = Some((Reflection::new(u, v, bits(extra), ReflectionKind::Edge), c)),
                    Ok(_) => {}
                    Err(e) => found = Err(e),
                }
            });
            found?;
            let (t, next) = step.expect("some reflection lowers the distance");
            out.push(t);
            cur = next;
            d -= 1;
        }
        Ok(out)
    }
}

/// Shortest sequence of reflections emptying `g`, with its length. Edge
/// reflections only unless `allow_nonedge`.
pub fn bfs_to_edgeless(g: &SimpleGraph, allow_nonedge: bool) -> Result<(usize, Vec<Reflection>)> {
    if !allow_nonedge {
        let mut memo = EdgeDistances::new();
        let w = memo.witness(g)?;
        return Ok((w.len(), w));
    }
    check_cap("mixed reflection distance", g.n(), MIXED_BFS_CAP)?;
    // Breadth first over isomorphism classes, remembering the first labelled
    // graph reaching each class and how it was reached.
    let mut nodes: Vec<(SimpleGraph, Option<(usize, Reflection)>)> = vec![(g.clone(), None)];
    let mut seen = HashSet::from([canonical_form(g)?]);
    let mut queue = VecDeque::from([0]);
    while let Some(i) = queue.pop_front() {
        let cur = nodes[i].0.clone();
        if cur.edge_count() == 0 {
            let mut seq = Vec::new();
            let mut at = i;
            while let Some((parent, t)) = nodes[at].1.clone() {
                seq.push(t);
                at = parent;
            }
            seq.reverse();
            return Ok((seq.len(), seq));
        }
        let mut next = Vec::new();
        for kind in [ReflectionKind::Edge, ReflectionKind::Nonedge] {
            for_each_legal(&cur, kind, |u, v, extra| {
                next.push((apply_unchecked(&cur, u, v, extra), Reflection::new(u, v, bits(extra), kind)));
            });
        }
        for (h, t) in next {
            if seen.insert(canonical_form(&h)?) {
                nodes.push((h, Some((i, t))));
                queue.push_back(nodes.len() - 1);
            }
        }
    }
    unreachable!("deleting edges one at a time always reaches the edgeless graph")
}

/// Fewest edges whose endpoints touch every edge. A reflection only changes
/// edges at its own pair, so this bounds the edge reflection distance below.
pub fn min_edge_edge_cover(g: &SimpleGraph) -> Result<usize> {
    check_cap("edge-edge cover", g.n(), COVER_CAP)?;
    let edges = g.edges();
    let mut k = 0;
    while !cover_search(&edges, 0, k) {
        k += 1;
    }
    Ok(k)
}

fn cover_search(edges: &[(usize, usize)], covered: u64, budget: usize) -> bool {
    let hit = |&(a, b): &(usize, usize)| covered >> (a - 1) & 1 == 1 || covered >> (b - 1) & 1 == 1;
    let Some(&(a, b)) = edges.iter().find(|e| !hit(e)) else {
        return true;
    };
    if budget == 0 {
        return false;
    }
    // Some chosen edge must contain a or b.
    edges
        .iter()
        .filter(|&&(x, y)| x == a || x == b || y == a || y == b)
        .any(|&(x, y)| cover_search(edges, covered | 1 << (x - 1) | 1 << (y - 1), budget - 1))
}

/// `K_2 ∨ K̄_k` inside a partition: spine `uv` and the `k` vertices joined to both.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct NestedBlock {
    pub u: usize,
    pub v: usize,
    pub w: Vec<usize>,
}

impl NestedBlock {
    pub fn edge_count(&self) -> usize {
        1 + 2 * self.w.len()
    }

    /// The edge reflection deleting exactly this block.
    pub fn reflection(&self) -> Reflection {
        Reflection::new(self.u, self.v, self.w.iter().copied(), ReflectionKind::Edge)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct NestedPartition {
    pub blocks: Vec<NestedBlock>,
    /// `m - 2 Σ k n_k`, which is just the number of blocks.
    pub bound: usize,
}

impl NestedPartition {
    pub fn reflections(&self) -> Vec<Reflection> {
        self.blocks.iter().map(NestedBlock::reflection).collect()
    }
}

struct Partitioner {
    edges: Vec<(usize, usize)>,
    // Candidate blocks as edge masks, by the lowest edge they contain.
    by_edge: Vec<Vec<(u64, NestedBlock)>>,
    memo: HashMap<u64, usize>,
}

impl Partitioner {
    fn new(g: &SimpleGraph) -> Self {
        let edges = g.edges();
        let index = |a: usize, b: usize| edges.iter().position(|&e| e == (a.min(b), a.max(b))).unwrap();
        let mut by_edge = vec![Vec::new(); edges.len()];
        for &(u, v) in &edges {
            let common = g.neighbor_mask(u) & g.neighbor_mask(v);
            let mut sub = 0u64;
            loop {
                let w: Vec<usize> = bits(sub).collect();
                let mut mask = 1u64 << index(u, v);
                for &x in &w {
                    mask |= 1 << index(u, x) | 1 << index(v, x);
                }
                by_edge[mask.trailing_zeros() as usize].push((mask, NestedBlock { u, v, w }));
                sub = sub.wrapping_sub(common) & common;
                if sub == 0 {
                    break;
                }
            }
        }
        for list in &mut by_edge {
            list.sort_by_key(|(_, b)| std::cmp::Reverse(b.w.len()));
        }
        Partitioner { edges, by_edge, memo: HashMap::new() }
    }

    /// Fewest blocks covering the edges in `left`.
    fn best(&mut self, left: u64) -> usize {
        if left == 0 {
            return 0;
        }
        if let Some(&b) = self.memo.get(&left) {
            return b;
        }
        let low = left.trailing_zeros() as usize;
        let mut best = usize::MAX;
        for t in 0..self.by_edge[low].len() {
            let mask = self.by_edge[low][t].0;
            if mask & !left == 0 {
                best = best.min(1 + self.best(left & !mask));
            }
        }
        self.memo.insert(left, best);
        best
    }

    fn blocks(&mut self, mut left: u64) -> Vec<NestedBlock> {
        let mut out = Vec::new();
        while left != 0 {
            let target = self.best(left);
            let low = left.trailing_zeros() as usize;
            let candidates = self.by_edge[low].clone();
            let (mask, block) = candidates
                .into_iter()
                .find(|(mask, _)| mask & !left == 0 && 1 + self.best(left & !mask) == target)
                .expect("memo is consistent");
            out.push(block);
            left &= !mask;
        }
        out
    }
}

/// An edge partition into nested triangles with the fewest blocks, larger
/// blocks preferred on ties. Each block is emptied by one edge reflection, so
/// the block count bounds the edge reflection distance from above.
pub fn nested_triangle_partition(g: &SimpleGraph) -> Result<NestedPartition> {
    check_cap("nested triangle partition", g.n(), PARTITION_CAP)?;
    let mut p = Partitioner::new(g);
    let all = if p.edges.len() == 64 { u64::MAX } else { (1u64 << p.edges.len()) - 1 };
    let blocks = p.blocks(all);
    Ok(NestedPartition { bound: blocks.len(), blocks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reflect::replay;

    fn edge_dist(g: &SimpleGraph) -> usize {
        let (d, w) = bfs_to_edgeless(g, false).unwrap();
        assert_eq!(replay(g, &w).unwrap().edge_count(), 0);
        d
    }

    #[test]
    fn paths_and_mixed() {
        assert_eq!(edge_dist(&SimpleGraph::path(6)), 5);
        let (d, w) = bfs_to_edgeless(&SimpleGraph::path(6), true).unwrap();
        assert_eq!(d, 3);
        assert_eq!(replay(&SimpleGraph::path(6), &w).unwrap().edge_count(), 0);
    }

    #[test]
    fn families() {
        assert_eq!(edge_dist(&SimpleGraph::cycle(5)), 3);
        assert_eq!(edge_dist(&SimpleGraph::complete(5)), 2);
        assert_eq!(edge_dist(&SimpleGraph::complete_bipartite(3, 3)), 3);
        assert_eq!(edge_dist(&SimpleGraph::nested_triangle(2)), 1);
        assert_eq!(edge_dist(&SimpleGraph::empty(4)), 0);
    }

    #[test]
    fn covers() {
        assert_eq!(min_edge_edge_cover(&SimpleGraph::complete(5)).unwrap(), 2);
        assert_eq!(min_edge_edge_cover(&SimpleGraph::complete_bipartite(3, 3)).unwrap(), 3);
        assert_eq!(min_edge_edge_cover(&SimpleGraph::complete(2)).unwrap(), 1);
        assert_eq!(min_edge_edge_cover(&SimpleGraph::empty(3)).unwrap(), 0);
    }

    #[test]
    fn partitions() {
        let d = nested_triangle_partition(&SimpleGraph::nested_triangle(2)).unwrap();
        assert_eq!(d.bound, 1);
        assert_eq!(d.blocks, vec![NestedBlock { u: 1, v: 2, w: vec![3, 4] }]);
        let s = SimpleGraph::square_with_spikes();
        let p = nested_triangle_partition(&s).unwrap();
        assert_eq!((p.bound, p.blocks.iter().all(|b| b.w.len() == 1)), (4, true));
        assert_eq!(replay(&s, &p.reflections()).unwrap().edge_count(), 0);
        assert_eq!(edge_dist(&s), 4);
        let tree = SimpleGraph::path(5);
        assert_eq!(nested_triangle_partition(&tree).unwrap().bound, 4);
    }
}
