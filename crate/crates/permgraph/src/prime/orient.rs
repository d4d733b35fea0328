//! Transitive orientations by backtracking with forced-arc propagation, and the
//! degree-count recovery of a permutation from a pair of orientations.

use serde::Serialize;

use crate::error::{check_cap, Error, Result};
use crate::graph::{automorphism_count, SimpleGraph};
use crate::invgraph::inversion_graph;
use crate::perm::{is_simple, Permutation};

pub const ORIENTATION_CAP: usize = 8;
/// How many orientations [`transitive_orientations`] keeps; the count stays exact.
pub const ORIENTATION_LIST_CAP: usize = 64;

/// Arcs `(u, v)` meaning `u -> v`, sorted.
pub type Orientation = Vec<(usize, usize)>;

#[derive(Clone, Debug, Serialize)]
pub struct OrientationList {
    pub count: u64,
    pub orientations: Vec<Orientation>,
}

#[derive(Clone)]
struct State {
    n: usize,
    // dir[a * n + b] == 1 means a -> b; -1 means b -> a; 0 unknown or not an edge.
    dir: Vec<i8>,
}

impl State {
    fn get(&self, a: usize, b: usize) -> i8 {
        self.dir[a * self.n + b]
    }

    /// Records `a -> b`; false on contradiction.
    fn force(&mut self, a: usize, b: usize, queue: &mut Vec<(usize, usize)>) -> bool {
        match self.get(a, b) {
            1 => true,
            -1 => false,
            _ => {
                self.dir[a * self.n + b] = 1;
                self.dir[b * self.n + a] = -1;
                queue.push((a, b));
                true
            }
        }
    }

    fn propagate(&mut self, g: &SimpleGraph, mut queue: Vec<(usize, usize)>) -> bool {
        let adj = |x: usize, y: usize| g.has_edge(x + 1, y + 1);
        while let Some((a, b)) = queue.pop() {
            for c in 0..self.n {
                if c == a || c == b {
                    continue;
                }
                let (bc, ac) = (adj(b, c), adj(a, c));
                let ok = match (bc, ac) {
                    // a -> b -> c would need ac, so c -> b.
                    (true, false) => self.force(c, b, &mut queue),
                    // c -> a -> b would need cb, so a -> c.
                    (false, true) => self.force(a, c, &mut queue),
                    (true, true) => {
                        let mut ok = true;
                        if self.get(b, c) == 1 {
                            ok &= self.force(a, c, &mut queue);
                        }
                        if self.get(c, a) == 1 {
                            ok &= self.force(c, b, &mut queue);
                        }
                        ok
                    }
                    (false, false) => true,
                };
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    fn arcs(&self) -> Orientation {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in 0..self.n {
                if self.get(a, b) == 1 {
                    out.push((a + 1, b + 1));
                }
            }
        }
        out
    }
}

struct Enumerator<'a> {
    g: &'a SimpleGraph,
    edges: Vec<(usize, usize)>,
    count: u64,
    kept: Vec<Orientation>,
    limit: usize,
    stop_after_first: bool,
}

impl Enumerator<'_> {
    fn run(&mut self, state: State) {
        if self.stop_after_first && self.count > 0 {
            return;
        }
        let next = self.edges.iter().find(|&&(a, b)| state.get(a - 1, b - 1) == 0);
        let Some(&(a, b)) = next else {
            self.count += 1;
            if self.kept.len() < self.limit {
                self.kept.push(state.arcs());
            }
            return;
        };
        for (x, y) in [(a - 1, b - 1), (b - 1, a - 1)] {
            let mut s = state.clone();
            let mut q = Vec::new();
            if s.force(x, y, &mut q) && s.propagate(self.g, q) {
                self.run(s);
            }
        }
    }
}

fn enumerate(g: &SimpleGraph, limit: usize, stop_after_first: bool) -> (u64, Vec<Orientation>) {
    let n = g.n();
    let mut e = Enumerator { g, edges: g.edges(), count: 0, kept: Vec::new(), limit, stop_after_first };
    e.run(State { n, dir: vec![0; n * n] });
    (e.count, e.kept)
}

/// All transitive orientations, counted exactly; at most
/// [`ORIENTATION_LIST_CAP`] of them are returned.
pub fn transitive_orientations(g: &SimpleGraph) -> Result<OrientationList> {
    check_cap("transitive orientations", g.n(), ORIENTATION_CAP)?;
    let (count, orientations) = enumerate(g, ORIENTATION_LIST_CAP, false);
    Ok(OrientationList { count, orientations })
}

/// Some transitive orientation, or `None` when `g` is not a comparability graph.
pub fn first_transitive_orientation(g: &SimpleGraph) -> Option<Orientation> {
    enumerate(g, 1, true).1.pop()
}

/// `(in-degree, out-degree)` per vertex.
fn degrees(n: usize, arcs: &Orientation) -> Vec<(usize, usize)> {
    let mut d = vec![(0, 0); n];
    for &(a, b) in arcs {
        d[a - 1].1 += 1;
        d[b - 1].0 += 1;
    }
    d
}

/// Reads a permutation off transitive orientations `f` of `g` and `h` of its
/// complement: a vertex's index is one more than its in-degree under `h` plus its
/// out-degree under `f`, and its value is one more than its in-degree under `h`
/// plus its in-degree under `f`. Returns the permutation and the vertex-to-value map.
pub(crate) fn permutation_from_orientations(
    n: usize,
    f: &Orientation,
    h: &Orientation,
) -> Option<(Permutation, Vec<usize>)> {
    let df = degrees(n, f);
    let dh = degrees(n, h);
    let mut values = vec![0; n];
    let mut value_of = vec![0; n];
    for v in 0..n {
        let index = 1 + dh[v].0 + df[v].1;
        let value = 1 + dh[v].0 + df[v].0;
        if values[index - 1] != 0 {
            return None;
        }
        values[index - 1] = value;
        value_of[v] = value;
    }
    Some((Permutation::new(values).ok()?, value_of))
}

fn simple_input(p: &Permutation, what: &'static str) -> Result<()> {
    check_cap(what, p.len(), ORIENTATION_CAP)?;
    if !is_simple(p) {
        return Err(Error::Precondition(format!("{p} is not simple")));
    }
    Ok(())
}

/// The permutations obtained from every pairing of a transitive orientation of
/// `G_π` with one of its complement. For simple π of length at least 4 there are
/// four pairings and the results are π, π⁻¹, π^rc and (π^rc)⁻¹ in some order.
pub fn recover_permutations_from_orientations(p: &Permutation) -> Result<Vec<Permutation>> {
    simple_input(p, "orientation recovery")?;
    let g = inversion_graph(p);
    let h = g.complement();
    let (_, fs) = enumerate(&g, ORIENTATION_LIST_CAP, false);
    let (_, hs) = enumerate(&h, ORIENTATION_LIST_CAP, false);
    let mut out = Vec::new();
    for f in &fs {
        for o in &hs {
            let (q, _) = permutation_from_orientations(p.len(), f, o)
                .ok_or_else(|| Error::Precondition("orientations do not combine".into()))?;
            out.push(q);
        }
    }
    out.sort();
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct SymmetryReport {
    pub automorphisms: u64,
    /// Distinct elements of {π, π⁻¹, π^rc, (π^rc)⁻¹}.
    pub images: Vec<Permutation>,
    /// `automorphisms * images.len() == 4`.
    pub consistent: bool,
}

/// Compares `|Aut(G_π)|` with the number of distinct symmetry images of a simple π.
pub fn automorphism_symmetry_check(p: &Permutation) -> Result<SymmetryReport> {
    simple_input(p, "automorphism check")?;
    if p.len() < 4 {
        return Err(Error::Precondition("needs a simple permutation of length at least 4".into()));
    }
    let automorphisms = automorphism_count(&inversion_graph(p))?;
    let images = p.symmetry_class();
    let consistent = automorphisms * images.len() as u64 == 4;
    Ok(SymmetryReport { automorphisms, images, consistent })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn counts() {
        let count = |g: &SimpleGraph| transitive_orientations(g).unwrap().count;
        assert_eq!(count(&SimpleGraph::cycle(5)), 0);
        assert_eq!(count(&SimpleGraph::path(4)), 2);
        assert_eq!(count(&SimpleGraph::complete(3)), 6);
        assert_eq!(count(&SimpleGraph::complete(5)), 120);
        assert_eq!(count(&SimpleGraph::empty(3)), 1);
        // Two independent edges, two choices each.
        assert_eq!(count(&SimpleGraph::matching(2)), 4);
        let k8 = transitive_orientations(&SimpleGraph::complete(8)).unwrap();
        assert_eq!(k8.count, 40320);
        assert_eq!(k8.orientations.len(), ORIENTATION_LIST_CAP);
    }

    #[test]
    fn orientations_are_transitive() {
        let g = SimpleGraph::from_edges(5, &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5)]).unwrap();
        for o in transitive_orientations(&g).unwrap().orientations {
            for &(a, b) in &o {
                for &(c, d) in &o {
                    if b == c {
                        assert!(o.contains(&(a, d)));
                    }
                }
            }
        }
    }

    #[test]
    fn recovery() {
        let got = recover_permutations_from_orientations(&p("3142")).unwrap();
        assert_eq!(got, vec![p("2413"), p("2413"), p("3142"), p("3142")]);
        let got = recover_permutations_from_orientations(&p("35142")).unwrap();
        let q = p("35142");
        let mut want = vec![q.clone(), q.inverse(), q.reverse_complement(), q.reverse_complement().inverse()];
        want.sort();
        assert_eq!(got, want);
        assert!(got.contains(&p("42513")));
        assert!(recover_permutations_from_orientations(&p("1234")).is_err());
    }

    #[test]
    fn symmetry_report() {
        let r = automorphism_symmetry_check(&p("2413")).unwrap();
        assert_eq!((r.automorphisms, r.images.len(), r.consistent), (2, 2, true));
    }
}
