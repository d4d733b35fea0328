//! Simple undirected graphs on vertices `1..=n`.

mod canon;
mod catalog;
mod graph6;
mod perfect;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use canon::{
    automorphism_count, canonical_form, canonical_labeling, find_isomorphism, is_isomorphic, CanonicalForm, CANON_CAP,
};
pub use catalog::{generate_all_graphs, CATALOG_CAP};
pub use graph6::{graph6_decode, graph6_encode, GRAPH6_CAP};
pub use perfect::{chromatic_number, clique_number, is_perfect, PERFECT_CAP};

/// Hard limit imposed by the bitset rows.
pub const MAX_VERTICES: usize = 64;

/// Adjacency is stored as one bitmask row per vertex; bit `u - 1` of row
/// `v - 1` is set when `uv` is an edge.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl SimpleGraph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        SimpleGraph { n, adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::SizeCap { what: "graph", n, cap: MAX_VERTICES });
        }
        let mut g = SimpleGraph::empty(n);
        for &(u, v) in edges {
            if u == v || u == 0 || v == 0 || u > n || v > n {
                return Err(Error::InvalidGraph(format!("bad edge ({u},{v}) on {n} vertices")));
            }
            if g.has_edge(u, v) {
                return Err(Error::InvalidGraph(format!("repeated edge ({u},{v})")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn from_rows(n: usize, adj: Vec<u64>) -> Self {
        debug_assert_eq!(adj.len(), n);
        SimpleGraph { n, adj }
    }

    pub fn complete(n: usize) -> Self {
        SimpleGraph::empty(n).complement()
    }

    /// The path `1 - 2 - ... - n`.
    pub fn path(n: usize) -> Self {
        let mut g = SimpleGraph::empty(n);
        for v in 1..n {
            g.add_edge(v, v + 1);
        }
        g
    }

    /// The cycle `1 - 2 - ... - n - 1`, for `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let mut g = SimpleGraph::path(n);
        g.add_edge(n, 1);
        g
    }

    /// Parts `1..=a` and `a+1..=a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = SimpleGraph::empty(a + b);
        for u in 1..=a {
            for v in a + 1..=a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// `m` disjoint edges.
    pub fn matching(m: usize) -> Self {
        let mut g = SimpleGraph::empty(2 * m);
        for i in 0..m {
            g.add_edge(2 * i + 1, 2 * i + 2);
        }
        g
    }

    /// `K_2 ∨ K̄_k`: the edge `12` joined to `k` independent vertices.
    pub fn nested_triangle(k: usize) -> Self {
        let mut g = SimpleGraph::empty(k + 2);
        g.add_edge(1, 2);
        for w in 3..=k + 2 {
            g.add_edge(1, w);
            g.add_edge(2, w);
        }
        g
    }

    /// The 4-cycle `1234` with a triangle erected on each side: vertex `4 + i`
    /// is joined to `i` and `i + 1 (mod 4)`.
    pub fn square_with_spikes() -> Self {
        let mut g = SimpleGraph::cycle(4).disjoint_union(&SimpleGraph::empty(4));
        for i in 1..=4 {
            g.add_edge(4 + i, i);
            g.add_edge(4 + i, i % 4 + 1);
        }
        g
    }

    /// `G(n, p)`: each pair independently an edge with probability `p`, pairs
    /// drawn in the order `(1,2), (1,3), ..., (n-1,n)`.
    pub fn random<R: rand::Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Self {
        let mut g = SimpleGraph::empty(n);
        for u in 1..=n {
            for v in u + 1..=n {
                if rng.gen_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u - 1] >> (v - 1) & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v);
        self.adj[u - 1] |= 1 << (v - 1);
        self.adj[v - 1] |= 1 << (u - 1);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u - 1] &= !(1 << (v - 1));
        self.adj[v - 1] &= !(1 << (u - 1));
    }

    pub fn toggle_edge(&mut self, u: usize, v: usize) {
        assert!(u != v);
        self.adj[u - 1] ^= 1 << (v - 1);
        self.adj[v - 1] ^= 1 << (u - 1);
    }

    /// Neighbourhood of `v` as a bitmask over 0-based vertex indices.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v - 1]
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        bits(self.adj[v - 1]).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 1..=self.n {
            for v in bits(self.adj[u - 1] >> u) {
                out.push((u, v + u));
            }
        }
        out
    }

    pub fn all_mask(&self) -> u64 {
        low_mask(self.n)
    }

    pub fn complement(&self) -> Self {
        let all = self.all_mask();
        let adj = (0..self.n).map(|i| !self.adj[i] & all & !(1 << i)).collect();
        SimpleGraph { n: self.n, adj }
    }

    /// Relabels vertex `v` as `map[v - 1]`; `map` must be a permutation of `1..=n`.
    pub fn relabel(&self, map: &[usize]) -> Self {
        assert_eq!(map.len(), self.n);
        let mut g = SimpleGraph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(map[u - 1], map[v - 1]);
        }
        g
    }

    /// The subgraph induced by `vertices`, relabelled `1..=k` in the order given.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut g = SimpleGraph::empty(vertices.len());
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.add_edge(i + 1, j + 1);
                }
            }
        }
        g
    }

    /// Same as [`SimpleGraph::induced`] with the vertex set given as a 0-based bitmask.
    pub fn induced_mask(&self, mask: u64) -> Self {
        let vs: Vec<usize> = bits(mask).collect();
        self.induced(&vs)
    }

    pub fn disjoint_union(&self, other: &SimpleGraph) -> Self {
        let mut g = SimpleGraph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        g
    }

    pub fn join(&self, other: &SimpleGraph) -> Self {
        let mut g = self.disjoint_union(other);
        for u in 1..=self.n {
            for v in 1..=other.n {
                g.add_edge(u, v + self.n);
            }
        }
        g
    }

    /// Vertex sets of the connected components, each as a 0-based bitmask,
    /// ordered by least vertex.
    pub fn component_masks(&self) -> Vec<u64> {
        let mut left = self.all_mask();
        let mut out = Vec::new();
        while left != 0 {
            let mut comp = left & left.wrapping_neg();
            loop {
                let grown = bits(comp).fold(comp, |acc, v| acc | self.adj[v - 1]);
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            out.push(comp);
            left &= !comp;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.component_masks().len() <= 1
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.component_masks().len() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.is_forest() && self.is_connected()
    }

    /// True when `mask` induces a clique.
    pub fn is_clique(&self, mask: u64) -> bool {
        bits(mask).all(|v| self.adj[v - 1] & mask == mask & !(1 << (v - 1)))
    }

    /// True when `mask` induces no edge.
    pub fn is_independent(&self, mask: u64) -> bool {
        bits(mask).all(|v| self.adj[v - 1] & mask == 0)
    }
}

impl fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
        write!(f, "n={} [{}]", self.n, parts.join(" "))
    }
}

impl TryFrom<GraphJson> for SimpleGraph {
    type Error = Error;
    fn try_from(j: GraphJson) -> Result<Self> {
        let edges: Vec<(usize, usize)> = j.edges.iter().map(|e| (e[0], e[1])).collect();
        SimpleGraph::from_edges(j.n, &edges)
    }
}

impl From<SimpleGraph> for GraphJson {
    fn from(g: SimpleGraph) -> GraphJson {
        GraphJson { n: g.n, edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect() }
    }
}

/// Mask with the low `n` bits set.
pub fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a 0-based mask as 1-based vertices.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b + 1)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_constructions() {
        let k4 = SimpleGraph::complete(4);
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(k4.complement(), SimpleGraph::empty(4));
        assert_eq!(SimpleGraph::cycle(5).edge_count(), 5);
        assert_eq!(SimpleGraph::complete_bipartite(3, 3).edge_count(), 9);
        assert_eq!(SimpleGraph::nested_triangle(2).edge_count(), 5);
        assert!(SimpleGraph::path(6).is_tree());
        assert!(!SimpleGraph::cycle(4).is_forest());
        assert!(SimpleGraph::matching(3).is_forest());
        assert!(!SimpleGraph::matching(3).is_connected());
        assert!(SimpleGraph::empty(1).is_tree());
    }

    #[test]
    fn edges_are_sorted_pairs() {
        let g = SimpleGraph::from_edges(4, &[(3, 1), (4, 2), (1, 2)]).unwrap();
        assert_eq!(g.edges(), vec![(1, 2), (1, 3), (2, 4)]);
        assert!(SimpleGraph::from_edges(3, &[(1, 1)]).is_err());
        assert!(SimpleGraph::from_edges(3, &[(1, 2), (2, 1)]).is_err());
        assert!(SimpleGraph::from_edges(3, &[(1, 4)]).is_err());
    }

    #[test]
    fn json_shape() {
        let g = SimpleGraph::path(3);
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"n":3,"edges":[[1,2],[2,3]]}"#);
        let back: SimpleGraph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<SimpleGraph>(r#"{"n":2,"edges":[[1,3]]}"#).is_err());
    }

    #[test]
    fn induced_and_joins() {
        let c5 = SimpleGraph::cycle(5);
        assert_eq!(c5.induced(&[1, 2, 3]), SimpleGraph::path(3));
        let j = SimpleGraph::empty(2).join(&SimpleGraph::empty(2));
        assert_eq!(j.edge_count(), 4);
        assert_eq!(SimpleGraph::path(2).disjoint_union(&SimpleGraph::path(2)), SimpleGraph::matching(2));
    }
}
