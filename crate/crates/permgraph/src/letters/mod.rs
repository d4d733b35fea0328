//! Letter graphs.
//!
//! A word `w` over letters `1..=k` and a decoder `D ⊆ [k]²` define a graph on
//! the positions of `w`: for `i < j`, `ij` is an edge exactly when
//! `(w(i), w(j)) ∈ D`. The lettericity of a graph is the least `k` for which
//! it arises this way under some vertex order.

mod construct;
mod solver;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

pub use construct::{encode_chain, extend_lettering, palindromic_savings};
pub use solver::{
    cochromatic_number, lettericity_exact, random_lettericity_trial, LettericityTrial, LETTERICITY_CAP,
    LETTERICITY_K_CAP,
};

/// Word plus decoder. Letters are `1..=k`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "LetteringJson", into = "LetteringJson")]
pub struct Lettering {
    k: usize,
    word: Vec<usize>,
    decoder: BTreeSet<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct LetteringJson {
    k: usize,
    word: Vec<usize>,
    decoder: Vec<[usize; 2]>,
}

impl Lettering {
    pub fn new(k: usize, word: Vec<usize>, decoder: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let decoder: BTreeSet<_> = decoder.into_iter().collect();
        let ok = |a: usize| (1..=k).contains(&a);
        if !word.iter().all(|&a| ok(a)) || !decoder.iter().all(|&(a, b)| ok(a) && ok(b)) {
            return Err(Error::Precondition(format!("letters must lie in 1..={k}")));
        }
        Ok(Lettering { k, word, decoder })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn decoder(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.decoder.iter().copied()
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.decoder.contains(&(a, b))
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Number of distinct letters in the word.
    pub fn letters_used(&self) -> usize {
        self.word.iter().collect::<BTreeSet<_>>().len()
    }

    /// Letters renamed in order of first appearance; unused letters dropped.
    pub fn normalized(&self) -> Lettering {
        let mut rename = vec![0; self.k + 1];
        let mut next = 0;
        for &a in &self.word {
            if rename[a] == 0 {
                next += 1;
                rename[a] = next;
            }
        }
        let word = self.word.iter().map(|&a| rename[a]).collect();
        let decoder = self
            .decoder
            .iter()
            .filter(|&&(a, b)| rename[a] != 0 && rename[b] != 0)
            .map(|&(a, b)| (rename[a], rename[b]))
            .collect();
        Lettering { k: next, word, decoder }
    }
}

pub(crate) fn letter_name(a: usize) -> String {
    if a <= 26 {
        char::from(b'a' + (a - 1) as u8).to_string()
    } else {
        format!("<{a}>")
    }
}

impl fmt::Display for Lettering {
    /// `abaabb {(a,b),(b,b)}`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &a in &self.word {
            f.write_str(&letter_name(a))?;
        }
        let pairs: Vec<String> =
            self.decoder.iter().map(|&(a, b)| format!("({},{})", letter_name(a), letter_name(b))).collect();
        write!(f, " {{{}}}", pairs.join(","))
    }
}

impl TryFrom<LetteringJson> for Lettering {
    type Error = Error;
    fn try_from(j: LetteringJson) -> Result<Self> {
        Lettering::new(j.k, j.word, j.decoder.into_iter().map(|[a, b]| (a, b)))
    }
}

impl From<Lettering> for LetteringJson {
    fn from(l: Lettering) -> Self {
        LetteringJson { k: l.k, word: l.word, decoder: l.decoder.into_iter().map(|(a, b)| [a, b]).collect() }
    }
}

/// The letter graph on positions `1..=len`.
pub fn decode(l: &Lettering) -> SimpleGraph {
    let w = &l.word;
    let mut g = SimpleGraph::empty(w.len());
    for j in 0..w.len() {
        for i in 0..j {
            if l.contains(w[i], w[j]) {
                g.add_edge(i + 1, j + 1);
            }
        }
    }
    g
}

/// A lettering together with the vertex placed at each position:
/// `order[i]` sits at position `i + 1`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Encoding {
    pub lettering: Lettering,
    pub order: Vec<usize>,
}

impl Encoding {
    /// Whether decoding reproduces the subgraph of `g` induced on `order`.
    pub fn encodes(&self, g: &SimpleGraph) -> bool {
        self.order.len() == self.lettering.len()
            && self.order.iter().all(|&v| v >= 1 && v <= g.n())
            && g.induced(&self.order) == decode(&self.lettering)
    }

    /// The letter of vertex `v`, if placed.
    pub fn letter_of(&self, v: usize) -> Option<usize> {
        self.order.iter().position(|&x| x == v).map(|i| self.lettering.word[i])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invgraph::inversion_graph;
    use crate::perm::Permutation;

    #[test]
    fn threshold_word() {
        let l = Lettering::new(2, vec![1, 2, 1, 1, 2, 2], [(1, 2), (2, 2)]).unwrap();
        let g = decode(&l);
        assert_eq!(g.edge_count(), 10);
        let p: Permutation = "435621".parse().unwrap();
        assert_eq!(g.relabel(p.values()), inversion_graph(&p));
        assert_eq!(l.to_string(), "abaabb {(a,b),(b,b)}");
    }

    #[test]
    fn trivial_decoders() {
        let e = Lettering::new(2, vec![1, 2, 1], []).unwrap();
        assert_eq!(decode(&e).edge_count(), 0);
        let k = Lettering::new(1, vec![1; 5], [(1, 1)]).unwrap();
        assert_eq!(decode(&k), SimpleGraph::complete(5));
        assert!(Lettering::new(1, vec![2], []).is_err());
    }

    #[test]
    fn normalize() {
        let l = Lettering::new(3, vec![3, 1, 3], [(3, 1), (2, 2)]).unwrap();
        let m = l.normalized();
        assert_eq!(m.word(), &[1, 2, 1]);
        assert_eq!(m.decoder().collect::<Vec<_>>(), vec![(1, 2)]);
        assert_eq!(decode(&l), decode(&m));
    }
}
