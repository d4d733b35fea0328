//! Brute-force canonical labelling.
//!
//! Vertices are first split into colour classes by iterated degree refinement,
//! which every isomorphism must respect. The canonical code is then the least
//! upper-triangle adjacency bitstring (graph6 bit order) over all relabelings
//! that list the colour classes in order, found by branch and bound.

use super::{bits, SimpleGraph};
use crate::error::{check_cap, Result};

pub const CANON_CAP: usize = 9;

/// Isomorphism-class key. Two graphs have equal forms iff they are isomorphic.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalForm {
    n: u8,
    code: u64,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Upper-triangle bits, first pair in the most significant position.
    pub fn code(&self) -> u64 {
        self.code
    }

    pub fn bitstring(&self) -> String {
        let m = pairs(self.n());
        (0..m).map(|t| if self.code >> (m - 1 - t) & 1 == 1 { '1' } else { '0' }).collect()
    }

    /// The representative graph carrying the canonical labels.
    pub fn to_graph(&self) -> SimpleGraph {
        let n = self.n();
        let m = pairs(n);
        let mut g = SimpleGraph::empty(n);
        let mut t = 0;
        for j in 1..n {
            for i in 0..j {
                if self.code >> (m - 1 - t) & 1 == 1 {
                    g.add_edge(i + 1, j + 1);
                }
                t += 1;
            }
        }
        g
    }
}

fn pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Equitable-ish colouring: degrees, refined by neighbour colour multisets until stable.
fn refined_colours(g: &SimpleGraph) -> Vec<u32> {
    let n = g.n();
    let mut colour: Vec<u32> = (1..=n).map(|v| g.degree(v) as u32).collect();
    let mut classes = 0;
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (1..=n)
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).iter().map(|&u| colour[u - 1]).collect();
                nb.sort_unstable();
                (colour[v - 1], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        colour = sigs.iter().map(|s| distinct.binary_search(s).expect("present") as u32).collect();
        if distinct.len() == classes {
            return colour;
        }
        classes = distinct.len();
    }
}

struct Search<'a> {
    g: &'a SimpleGraph,
    slot_colour: Vec<u32>,
    colour: Vec<u32>,
    assigned: Vec<usize>,
    best: Option<(Vec<u64>, Vec<usize>)>,
}

impl Search<'_> {
    fn column(&self, x: usize) -> u64 {
        // Bits for pairs (i, j) with i < j = current slot, first i most significant.
        let j = self.assigned.len();
        self.assigned.iter().enumerate().fold(0u64, |acc, (i, &a)| acc | (self.g.has_edge(a, x) as u64) << (j - 1 - i))
    }

    fn run(&mut self, chunks: &mut Vec<u64>, used: u64) {
        let j = self.assigned.len();
        if j == self.g.n() {
            let better = match &self.best {
                None => true,
                Some((best, _)) => chunks.as_slice() < best.as_slice(),
            };
            if better {
                self.best = Some((chunks.clone(), self.assigned.clone()));
            }
            return;
        }
        let want = self.slot_colour[j];
        for x in 1..=self.g.n() {
            if used >> (x - 1) & 1 == 1 || self.colour[x - 1] != want {
                continue;
            }
            chunks.push(self.column(x));
            // The best code can change under us, so compare the whole prefix each time.
            let worse = match &self.best {
                None => false,
                Some((best, _)) => chunks.as_slice() > &best[..=j],
            };
            if !worse {
                self.assigned.push(x);
                self.run(chunks, used | 1 << (x - 1));
                self.assigned.pop();
            }
            chunks.pop();
        }
    }
}

/// Canonical form plus the relabelling that produces it: `labels[v - 1]` is the
/// canonical label of `v`.
pub fn canonical_labeling(g: &SimpleGraph) -> Result<(CanonicalForm, Vec<usize>)> {
    check_cap("canonical form", g.n(), CANON_CAP)?;
    let n = g.n();
    let colour = refined_colours(g);
    let mut slot_colour = colour.clone();
    slot_colour.sort_unstable();
    let mut s = Search { g, slot_colour, colour, assigned: Vec::new(), best: None };
    s.run(&mut Vec::new(), 0);
    let (chunks, order) = s.best.expect("at least one labelling");
    let mut code = 0u64;
    for (j, c) in chunks.iter().enumerate() {
        code = (code << j) | c;
    }
    let mut labels = vec![0; n];
    for (slot, &v) in order.iter().enumerate() {
        labels[v - 1] = slot + 1;
    }
    Ok((CanonicalForm { n: n as u8, code }, labels))
}

pub fn canonical_form(g: &SimpleGraph) -> Result<CanonicalForm> {
    Ok(canonical_labeling(g)?.0)
}

pub fn is_isomorphic(g: &SimpleGraph, h: &SimpleGraph) -> Result<bool> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        check_cap("canonical form", g.n().max(h.n()), CANON_CAP)?;
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

/// An isomorphism `g -> h` as a vertex map `map[v - 1]`, if one exists.
pub fn find_isomorphism(g: &SimpleGraph, h: &SimpleGraph) -> Result<Option<Vec<usize>>> {
    if g.n() != h.n() {
        return Ok(None);
    }
    let (cg, lg) = canonical_labeling(g)?;
    let (ch, lh) = canonical_labeling(h)?;
    if cg != ch {
        return Ok(None);
    }
    let mut from_label = vec![0; h.n()];
    for (v, &l) in lh.iter().enumerate() {
        from_label[l - 1] = v + 1;
    }
    Ok(Some(lg.iter().map(|&l| from_label[l - 1]).collect()))
}

/// Number of adjacency-preserving permutations of the vertex set.
pub fn automorphism_count(g: &SimpleGraph) -> Result<u64> {
    check_cap("automorphism count", g.n(), CANON_CAP)?;
    let colour = refined_colours(g);
    let mut image = Vec::with_capacity(g.n());
    Ok(count_autos(g, &colour, &mut image, 0))
}

fn count_autos(g: &SimpleGraph, colour: &[u32], image: &mut Vec<usize>, used: u64) -> u64 {
    let v = image.len() + 1;
    if v > g.n() {
        return 1;
    }
    let mut total = 0;
    for x in bits(g.all_mask() & !used) {
        if colour[x - 1] != colour[v - 1] {
            continue;
        }
        let ok = image.iter().enumerate().all(|(i, &y)| g.has_edge(i + 1, v) == g.has_edge(y, x));
        if ok {
            image.push(x);
            total += count_autos(g, colour, image, used | 1 << (x - 1));
            image.pop();
        }
    }
    total
}
