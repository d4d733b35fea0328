//! Modules, primality, chains and edge classes.

mod orient;

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::graph::{bits, SimpleGraph};

pub(crate) use orient::permutation_from_orientations;
pub use orient::{
    automorphism_symmetry_check, first_transitive_orientation, recover_permutations_from_orientations,
    transitive_orientations, Orientation, OrientationList, SymmetryReport, ORIENTATION_CAP, ORIENTATION_LIST_CAP,
};

fn mask_of(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0, |m, &v| m | 1 << (v - 1))
}

/// Every vertex outside `set` sees all of it or none of it.
pub fn is_module(g: &SimpleGraph, set: &[usize]) -> bool {
    is_module_mask(g, mask_of(set))
}

fn is_module_mask(g: &SimpleGraph, s: u64) -> bool {
    bits(g.all_mask() & !s).all(|x| {
        let seen = g.neighbor_mask(x) & s;
        seen == 0 || seen == s
    })
}

/// Smallest module containing both `a` and `b`: keep absorbing splitters.
fn module_closure(g: &SimpleGraph, a: usize, b: usize) -> u64 {
    let mut s = mask_of(&[a, b]);
    loop {
        let splitters: u64 = bits(g.all_mask() & !s)
            .filter(|&x| {
                let seen = g.neighbor_mask(x) & s;
                seen != 0 && seen != s
            })
            .fold(0, |m, x| m | 1 << (x - 1));
        if splitters == 0 {
            return s;
        }
        s |= splitters;
    }
}

/// A smallest nontrivial module, lexicographically least among those.
///
/// A minimum nontrivial module is the closure of any pair inside it, so it
/// suffices to close every pair.
pub fn find_nontrivial_module(g: &SimpleGraph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut best: Option<Vec<usize>> = None;
    for a in 1..=n {
        for b in a + 1..=n {
            let s = module_closure(g, a, b);
            if s == g.all_mask() {
                continue;
            }
            let cand: Vec<usize> = bits(s).collect();
            let better = match &best {
                None => true,
                Some(cur) => (cand.len(), &cand) < (cur.len(), cur),
            };
            if better {
                best = Some(cand);
            }
        }
    }
    best
}

/// No nontrivial module. Graphs on at most two vertices are prime by this definition.
pub fn is_prime(g: &SimpleGraph) -> bool {
    find_nontrivial_module(g).is_none()
}

/// Each `p_i` with `i >= 3` is a pendant (adjacent to `p_{i-1}` only among the earlier
/// vertices) or an antipendant (adjacent to all earlier vertices except `p_{i-1}`).
pub fn is_chain(g: &SimpleGraph, seq: &[usize]) -> bool {
    let mut seen = 0u64;
    for &v in seq {
        if v == 0 || v > g.n() || seen >> (v - 1) & 1 == 1 {
            return false;
        }
        seen |= 1 << (v - 1);
    }
    (2..seq.len()).all(|i| chain_step_ok(g, mask_of(&seq[..i - 1]), seq[i - 1], seq[i]))
}

fn chain_step_ok(g: &SimpleGraph, earlier: u64, prev: usize, x: usize) -> bool {
    let nx = g.neighbor_mask(x);
    if g.has_edge(x, prev) {
        nx & earlier == 0
    } else {
        nx & earlier == earlier
    }
}

/// Whether `p_i` (`i >= 3`) was added as a pendant.
pub fn chain_step_is_pendant(g: &SimpleGraph, seq: &[usize], i: usize) -> bool {
    g.has_edge(seq[i - 1], seq[i - 2])
}

/// A shortest chain that starts `u, v` and ends at `w`.
///
/// Whether a vertex may extend a chain depends only on the set of vertices
/// used so far and on the last one, so the search runs over those pairs.
pub fn find_chain(g: &SimpleGraph, u: usize, v: usize, w: usize) -> Option<Vec<usize>> {
    let n = g.n();
    if u == v || v == w || u == w || [u, v, w].iter().any(|&x| x == 0 || x > n) {
        return None;
    }
    type State = (u64, usize);
    let start: State = (mask_of(&[u, v]), v);
    let mut parent: HashMap<State, State> = HashMap::new();
    let mut queue = VecDeque::from([start]);
    while let Some((used, last)) = queue.pop_front() {
        let earlier = used & !(1 << (last - 1));
        for x in bits(g.all_mask() & !used) {
            if !chain_step_ok(g, earlier, last, x) {
                continue;
            }
            let next = (used | 1 << (x - 1), x);
            if x == w {
                let mut path = vec![w];
                let mut cur = (used, last);
                while cur != start {
                    path.push(cur.1);
                    cur = parent[&cur];
                }
                path.extend([v, u]);
                path.reverse();
                return Some(path);
            }
            if next != start && !parent.contains_key(&next) {
                parent.insert(next, (used, last));
                queue.push_back(next);
            }
        }
    }
    None
}

/// Edges grouped into classes of the closure of the forcing relation
/// `ab ∧ bc` (shared endpoint `b`, `ac` missing).
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct EdgeClassPartition {
    /// Each class sorted; classes ordered by their least edge.
    pub classes: Vec<Vec<(usize, usize)>>,
}

impl EdgeClassPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn same_class(&self, e: (usize, usize), f: (usize, usize)) -> bool {
        let norm = |(a, b): (usize, usize)| (a.min(b), a.max(b));
        let (e, f) = (norm(e), norm(f));
        self.classes.iter().any(|c| c.contains(&e) && c.contains(&f))
    }
}

pub fn edge_classes(g: &SimpleGraph) -> EdgeClassPartition {
    let edges = g.edges();
    let index: HashMap<(usize, usize), usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let id = |a: usize, b: usize| index[&(a.min(b), a.max(b))];
    let mut parent: Vec<usize> = (0..edges.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for b in 1..=g.n() {
        let nb = g.neighbors(b);
        for (i, &a) in nb.iter().enumerate() {
            for &c in &nb[i + 1..] {
                if !g.has_edge(a, c) {
                    let (x, y) = (find(&mut parent, id(a, b)), find(&mut parent, id(b, c)));
                    parent[x.max(y)] = x.min(y);
                }
            }
        }
    }
    let mut groups: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut slot: HashMap<usize, usize> = HashMap::new();
    for (i, &e) in edges.iter().enumerate() {
        let r = find(&mut parent, i);
        let k = *slot.entry(r).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[k].push(e);
    }
    EdgeClassPartition { classes: groups }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invgraph::inversion_graph;

    #[test]
    fn modules() {
        let p4 = SimpleGraph::path(4);
        assert!(is_module(&p4, &[2]));
        assert!(is_prime(&p4));
        let p3 = SimpleGraph::path(3);
        assert!(is_module(&p3, &[1, 3]));
        assert!(!is_prime(&p3));
        assert_eq!(find_nontrivial_module(&p3), Some(vec![1, 3]));
        assert!(is_prime(&SimpleGraph::cycle(5)));
        assert!(!is_prime(&SimpleGraph::cycle(4)));
        assert!(is_prime(&SimpleGraph::empty(2)));
        // Among the size-2 modules of K4, {1,2} is least.
        assert_eq!(find_nontrivial_module(&SimpleGraph::complete(4)), Some(vec![1, 2]));
    }

    #[test]
    fn chain_in_p4() {
        let g = inversion_graph(&"2413".parse().unwrap());
        assert_eq!(find_chain(&g, 2, 1, 3), Some(vec![2, 1, 4, 3]));
        assert!(is_chain(&g, &[2, 1, 4, 3]));
        assert!(!is_chain(&g, &[2, 1, 3]));
    }

    #[test]
    fn no_chain_out_of_a_module() {
        // {1,3} is a module of the path 1-2-3 plus a pendant 4 on 2.
        let g = SimpleGraph::from_edges(4, &[(1, 2), (2, 3), (2, 4)]).unwrap();
        assert!(is_module(&g, &[1, 3]));
        assert_eq!(find_chain(&g, 1, 3, 2), None);
        assert_eq!(find_chain(&g, 1, 3, 4), None);
    }

    #[test]
    fn classes() {
        assert_eq!(edge_classes(&SimpleGraph::matching(2)).len(), 2);
        assert_eq!(edge_classes(&SimpleGraph::path(4)).len(), 1);
        assert_eq!(edge_classes(&SimpleGraph::complete(4)).len(), 6);
        let c = edge_classes(&SimpleGraph::path(4));
        assert!(c.same_class((1, 2), (4, 3)));
    }
}
