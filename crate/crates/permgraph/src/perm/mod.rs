//! Permutations in one-line notation.
//!
//! Indices and values are both 1-based, so `Permutation::at(1)` is the first
//! entry and the entries of a permutation of length `n` are exactly `1..=n`.

mod lehmer;
mod pattern;
mod stats;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use lehmer::{inversion_polynomial, is_log_concave, lehmer_decode, lehmer_encode, LehmerCode};
pub use pattern::contains_pattern;
pub use stats::{descent_profile, find_interval, is_simple, DescentProfile, Interval};

/// A permutation of `1..=n`, stored as its one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    values: Vec<usize>,
}

/// The four symmetries used throughout: the inverse, and the dihedral moves.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Symmetry {
    Inverse,
    Reverse,
    Complement,
    ReverseComplement,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SumKind {
    Direct,
    Skew,
}

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!("value {v} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(format!("value {v} repeated")));
            }
        }
        Ok(Permutation { values })
    }

    pub(crate) fn from_vec_unchecked(values: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation { values }
    }

    pub fn identity(n: usize) -> Self {
        Permutation { values: (1..=n).collect() }
    }

    /// `n (n-1) ... 1`
    pub fn decreasing(n: usize) -> Self {
        Permutation { values: (1..=n).rev().collect() }
    }

    /// Relabels an arbitrary sequence of distinct numbers by rank.
    pub fn standardize<T: Ord>(seq: &[T]) -> Result<Self> {
        let mut idx: Vec<usize> = (0..seq.len()).collect();
        idx.sort_by(|&a, &b| seq[a].cmp(&seq[b]));
        if idx.windows(2).any(|w| seq[w[0]] == seq[w[1]]) {
            return Err(Error::InvalidPermutation("repeated entries".into()));
        }
        let mut values = vec![0; seq.len()];
        for (rank, &i) in idx.iter().enumerate() {
            values[i] = rank + 1;
        }
        Permutation::new(values)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false; kept for clippy's sake.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// π(i), 1-based.
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    /// The index holding value `v`, i.e. π⁻¹(v).
    pub fn index_of(&self, v: usize) -> usize {
        self.values.iter().position(|&x| x == v).expect("value in range") + 1
    }

    /// Entries as `(index, value)` points of the plot.
    pub fn points(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.values.iter().enumerate().map(|(i, &v)| (i + 1, v))
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { values: inv }
    }

    pub fn reverse(&self) -> Self {
        Permutation { values: self.values.iter().rev().copied().collect() }
    }

    pub fn complement(&self) -> Self {
        let n = self.len();
        Permutation { values: self.values.iter().map(|&v| n + 1 - v).collect() }
    }

    pub fn reverse_complement(&self) -> Self {
        self.reverse().complement()
    }

    pub fn symmetry(&self, which: Symmetry) -> Self {
        match which {
            Symmetry::Inverse => self.inverse(),
            Symmetry::Reverse => self.reverse(),
            Symmetry::Complement => self.complement(),
            Symmetry::ReverseComplement => self.reverse_complement(),
        }
    }

    /// The distinct elements of {π, π⁻¹, π^rc, (π^rc)⁻¹}, sorted.
    pub fn symmetry_class(&self) -> Vec<Permutation> {
        let rc = self.reverse_complement();
        let mut out = vec![self.clone(), self.inverse(), rc.inverse(), rc];
        out.sort();
        out.dedup();
        out
    }

    /// Function composition `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::Precondition("composing permutations of different lengths".into()));
        }
        Ok(Permutation { values: other.values.iter().map(|&i| self.values[i - 1]).collect() })
    }

    pub fn direct_sum(&self, other: &Permutation) -> Self {
        let m = self.len();
        let mut values = self.values.clone();
        values.extend(other.values.iter().map(|&v| v + m));
        Permutation { values }
    }

    pub fn skew_sum(&self, other: &Permutation) -> Self {
        let k = other.len();
        let mut values: Vec<usize> = self.values.iter().map(|&v| v + k).collect();
        values.extend_from_slice(&other.values);
        Permutation { values }
    }

    pub fn sum(&self, other: &Permutation, kind: SumKind) -> Self {
        match kind {
            SumKind::Direct => self.direct_sum(other),
            SumKind::Skew => self.skew_sum(other),
        }
    }

    /// Swaps the entries at indices `i` and `j`, i.e. `π ∘ t_ij`.
    pub fn swap_indices(&self, i: usize, j: usize) -> Self {
        let mut values = self.values.clone();
        values.swap(i - 1, j - 1);
        Permutation { values }
    }

    /// Index pairs `(i, j)` with `i < j` and `π(i) > π(j)`, sorted.
    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.values[i] > self.values[j] {
                    out.push((i + 1, j + 1));
                }
            }
        }
        out
    }

    pub fn is_inversion(&self, i: usize, j: usize) -> bool {
        i < j && self.at(i) > self.at(j)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let n = self.len();
        (0..n).map(|i| (i + 1..n).filter(|&j| self.values[i] > self.values[j]).count()).sum()
    }

    /// Cycles in standard form: each starts at its least element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.at(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths, largest first.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// Fewest transpositions whose product is π: `n` minus the number of cycles.
    pub fn absolute_length(&self) -> usize {
        self.len() - self.cycles().len()
    }

    /// All of S_n in lexicographic order, which is also Lehmer-rank order.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations { next: Some(Permutation::identity(n)) }
    }

    /// The lexicographic successor, if any.
    pub fn next_lex(&self) -> Option<Self> {
        let mut v = self.values.clone();
        let n = v.len();
        let i = (0..n.saturating_sub(1)).rev().find(|&i| v[i] < v[i + 1])?;
        let j = (i + 1..n).rev().find(|&j| v[j] > v[i]).expect("successor exists");
        v.swap(i, j);
        v[i + 1..].reverse();
        Some(Permutation { values: v })
    }
}

/// Iterator returned by [`Permutation::all`].
pub struct AllPermutations {
    next: Option<Permutation>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.next.take()?;
        self.next = cur.next_lex();
        Some(cur)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(values: Vec<usize>) -> Result<Self> {
        Permutation::new(values)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.values
    }
}

impl fmt::Display for Permutation {
    /// Digits when every value is a single digit, otherwise comma separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("unexpected character {c:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(values)
    }
}

impl FromStr for Symmetry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inverse" => Ok(Symmetry::Inverse),
            "reverse" => Ok(Symmetry::Reverse),
            "complement" => Ok(Symmetry::Complement),
            "reverse_complement" | "rc" => Ok(Symmetry::ReverseComplement),
            _ => Err(Error::Parse(format!("unknown symmetry {s:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("31542").values(), &[3, 1, 5, 4, 2]);
        assert_eq!(p("3,1,5,4,2"), p("31542"));
        let long = p("3,1,6,4,7,5,9,2,10,8");
        assert_eq!(long.to_string(), "3,1,6,4,7,5,9,2,10,8");
        assert_eq!(p("31542").to_string(), "31542");
        assert!("3155".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().is_err());
        assert!("0,1".parse::<Permutation>().is_err());
    }

    #[test]
    fn symmetries() {
        assert_eq!(p("3142").inverse(), p("2413"));
        assert_eq!(p("3142").reverse_complement(), p("3142"));
        assert_eq!(Permutation::identity(5).inverse(), Permutation::identity(5));
        assert_eq!(p("3142").symmetry_class(), vec![p("2413"), p("3142")]);
    }

    #[test]
    fn sums() {
        let t = p("21");
        assert_eq!(t.direct_sum(&t).direct_sum(&t), p("214365"));
        assert_eq!(p("12").skew_sum(&p("12")), p("3412"));
        assert_eq!(p("1").direct_sum(&p("1")), p("12"));
        assert_eq!(p("1").sum(&p("1"), SumKind::Skew), p("21"));
    }

    #[test]
    fn inversions_and_lengths() {
        assert_eq!(p("2413").inversions(), vec![(1, 3), (2, 3), (2, 4)]);
        assert!(Permutation::identity(6).inversions().is_empty());
        assert_eq!(p("4321").inversions().len(), 6);
        assert_eq!(p("3421").absolute_length(), 3);
        assert_eq!(p("4231").absolute_length(), 1);
        assert_eq!(p("4231").cycle_lengths(), vec![2, 1, 1]);
        let e = Permutation::identity(4);
        assert_eq!((e.length(), e.absolute_length()), (0, 0));
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let all: Vec<_> = Permutation::all(3).map(|q| q.to_string()).collect();
        assert_eq!(all, ["123", "132", "213", "231", "312", "321"]);
        assert_eq!(Permutation::all(6).count(), 720);
    }

    #[test]
    fn standardize_relabels_by_rank() {
        assert_eq!(Permutation::standardize(&[2, 4, 1, 6, 3]).unwrap(), p("24153"));
        assert!(Permutation::standardize(&[1, 1]).is_err());
    }
}
