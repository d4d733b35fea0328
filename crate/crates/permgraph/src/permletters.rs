//! Letter graphs over a host permutation.
//!
//! Positions `i < j` are adjacent when `(w(i), w(j))` lies in `I` and the
//! host inverts `i, j`, or lies in `N` and it does not. With one letter and
//! `I = {(a,a)}`, `N = ∅` this is the inversion graph of the host, with positions in place
//! of values.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{check_cap, Error, Result};
use crate::graph::{bits, SimpleGraph};
use crate::invgraph::inversion_graph;
use crate::perm::Permutation;

pub const ELL_PERM_CAP: usize = 5;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "PermLetteringJson", into = "PermLetteringJson")]
pub struct PermLettering {
    k: usize,
    word: Vec<usize>,
    host: Permutation,
    inv: BTreeSet<(usize, usize)>,
    non: BTreeSet<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct PermLetteringJson {
    k: usize,
    word: Vec<usize>,
    host: Permutation,
    #[serde(rename = "I")]
    inv: Vec<[usize; 2]>,
    #[serde(rename = "N")]
    non: Vec<[usize; 2]>,
}

impl PermLettering {
    pub fn new(
        k: usize,
        word: Vec<usize>,
        host: Permutation,
        inv: impl IntoIterator<Item = (usize, usize)>,
        non: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let inv: BTreeSet<_> = inv.into_iter().collect();
        let non: BTreeSet<_> = non.into_iter().collect();
        if word.len() != host.len() {
            return Err(Error::Precondition("word and host differ in length".into()));
        }
        let ok = |a: usize| (1..=k).contains(&a);
        if !word.iter().all(|&a| ok(a)) || !inv.iter().chain(&non).all(|&(a, b)| ok(a) && ok(b)) {
            return Err(Error::Precondition(format!("letters must lie in 1..={k}")));
        }
        Ok(PermLettering { k, word, host, inv, non })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn host(&self) -> &Permutation {
        &self.host
    }

    pub fn inversion_decoder(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.inv.iter().copied()
    }

    pub fn noninversion_decoder(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.non.iter().copied()
    }

    /// Both decoders replaced by their complements in `[k]²`; decodes to the
    /// complement graph.
    pub fn complemented(&self) -> PermLettering {
        let all = (1..=self.k).flat_map(|a| (1..=self.k).map(move |b| (a, b)));
        let inv = all.clone().filter(|p| !self.inv.contains(p)).collect();
        let non = all.filter(|p| !self.non.contains(p)).collect();
        PermLettering { inv, non, ..self.clone() }
    }
}

impl TryFrom<PermLetteringJson> for PermLettering {
    type Error = Error;
    fn try_from(j: PermLetteringJson) -> Result<Self> {
        let pairs = |v: Vec<[usize; 2]>| v.into_iter().map(|[a, b]| (a, b)).collect::<Vec<_>>();
        PermLettering::new(j.k, j.word, j.host, pairs(j.inv), pairs(j.non))
    }
}

impl From<PermLettering> for PermLetteringJson {
    fn from(l: PermLettering) -> Self {
        let pairs = |s: BTreeSet<(usize, usize)>| s.into_iter().map(|(a, b)| [a, b]).collect();
        PermLetteringJson { k: l.k, word: l.word, host: l.host, inv: pairs(l.inv), non: pairs(l.non) }
    }
}

/// The graph on positions `1..=n`.
pub fn decode_perm(l: &PermLettering) -> SimpleGraph {
    let (w, v) = (&l.word, l.host.values());
    let mut g = SimpleGraph::empty(w.len());
    for j in 0..w.len() {
        for i in 0..j {
            let pair = (w[i], w[j]);
            let edge = if v[i] > v[j] { l.inv.contains(&pair) } else { l.non.contains(&pair) };
            if edge {
                g.add_edge(i + 1, j + 1);
            }
        }
    }
    g
}

/// A permutation lettering plus the vertex at each position.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PermEncoding {
    pub lettering: PermLettering,
    pub order: Vec<usize>,
}

impl PermEncoding {
    pub fn encodes(&self, g: &SimpleGraph) -> bool {
        self.order.len() == g.n() && g.induced(&self.order) == decode_perm(&self.lettering)
    }
}

struct Search<'a> {
    g: &'a SimpleGraph,
    host: &'a [usize],
    k: usize,
    word: Vec<usize>,
    order: Vec<usize>,
    // [inversion?][(a - 1) * k + (b - 1)]: 0 unknown, 1 present, -1 absent.
    dec: [Vec<i8>; 2],
}

impl Search<'_> {
    fn run(&mut self, used: u64, max_letter: usize) -> bool {
        let j = self.order.len();
        if j == self.g.n() {
            return true;
        }
        let mut changed = Vec::with_capacity(j);
        for a in 1..=self.k.min(max_letter + 1) {
            for v in bits(self.g.all_mask() & !used) {
                changed.clear();
                let mut ok = true;
                for i in 0..j {
                    let t = (self.host[i] > self.host[j]) as usize;
                    let idx = (self.word[i] - 1) * self.k + (a - 1);
                    let want = if self.g.has_edge(self.order[i], v) { 1 } else { -1 };
                    match self.dec[t][idx] {
                        0 => {
                            self.dec[t][idx] = want;
                            changed.push((t, idx));
                        }
                        x if x != want => {
                            ok = false;
                            break;
                        }
                        _ => {}
                    }
                }
                if ok {
                    self.word.push(a);
                    self.order.push(v);
                    if self.run(used | 1 << (v - 1), max_letter.max(a)) {
                        return true;
                    }
                    self.word.pop();
                    self.order.pop();
                }
                for &(t, idx) in &changed {
                    self.dec[t][idx] = 0;
                }
            }
        }
        false
    }

    fn witness(&self, host: &Permutation) -> PermEncoding {
        let k = self.k;
        let pairs = |t: usize| {
            (0..k * k).filter(move |&i| self.dec[t][i] == 1).map(move |i| (i / k + 1, i % k + 1)).collect::<Vec<_>>()
        };
        let lettering =
            PermLettering::new(k, self.word.clone(), host.clone(), pairs(1), pairs(0)).expect("letters in range");
        PermEncoding { lettering, order: self.order.clone() }
    }
}

/// The least `k` for which some host, word and decoders produce `g`, with the
/// witness least by (host in lexicographic order, word). Decoder entries no
/// pair of positions asks about are left out.
pub fn ell_perm_exact(g: &SimpleGraph) -> Result<PermEncoding> {
    check_cap("permutation lettericity", g.n(), ELL_PERM_CAP)?;
    let n = g.n();
    if n == 0 {
        return Err(Error::Precondition("empty graph".into()));
    }
    for k in 1..=n.div_ceil(2) {
        for host in Permutation::all(n) {
            let mut s = Search {
                g,
                host: host.values(),
                k,
                word: Vec::new(),
                order: Vec::new(),
                dec: [vec![0; k * k], vec![0; k * k]],
            };
            if s.run(0, 0) {
                let w = s.witness(&host);
                debug_assert!(w.encodes(g));
                return Ok(w);
            }
        }
    }
    unreachable!("the universal encoding uses at most ceil(n/2) letters")
}

/// `⌈n/2⌉` letters for any graph: host `k…1 ⊕ k…1` (or `(k+1)…1 ⊕ k…1`), word
/// `ℓ_{k'} … ℓ_1 ℓ_1 … ℓ_k`. Every ordered letter pair occurs at most once as
/// an inversion and at most once as a non-inversion, so the decoders simply
/// copy the edges of `g` in position order.
pub fn universal_encoding(g: &SimpleGraph) -> Result<PermLettering> {
    let n = g.n();
    if n == 0 {
        return Err(Error::Precondition("empty graph".into()));
    }
    if n == 1 {
        return PermLettering::new(1, vec![1], Permutation::identity(1), [], []);
    }
    let k = n / 2;
    let first = n - k;
    let host = Permutation::decreasing(first).direct_sum(&Permutation::decreasing(k));
    let word: Vec<usize> = (1..=first).rev().chain(1..=k).collect();
    let v = host.values();
    let (mut inv, mut non) = (Vec::new(), Vec::new());
    for j in 0..n {
        for i in 0..j {
            if g.has_edge(i + 1, j + 1) {
                let pair = (word[i], word[j]);
                if v[i] > v[j] {
                    inv.push(pair);
                } else {
                    non.push(pair);
                }
            }
        }
    }
    let l = PermLettering::new(first, word, host, inv, non)?;
    debug_assert_eq!(&decode_perm(&l), g);
    Ok(l)
}

/// A host whose inversion graph is the path `P_n`: the increasing oscillation
/// `2,4,1,6,3,8,5,…` restricted to the first `n` path vertices `2,1,4,3,6,5,…`.
pub fn oscillation(n: usize) -> Permutation {
    let path: BTreeSet<usize> = (1..).flat_map(|t| [2 * t, 2 * t - 1]).take(n).collect();
    let seq: Vec<usize> = (1..=n + 4)
        .map(|i| match i {
            1 => 2,
            i if i % 2 == 0 => i + 2,
            i => i - 2,
        })
        .filter(|x| path.contains(x))
        .collect();
    Permutation::standardize(&seq).expect("distinct values")
}

/// Two letters for `C_n`: the path host, its two leaves lettered `b`, with
/// `I = {(a,a),(a,b),(b,a)}` and `N = {(b,b)}`. The leaves are not inverted, so
/// `N` joins them and closes the cycle.
pub fn cycle_encoding(n: usize) -> Result<PermLettering> {
    if n < 5 {
        return Err(Error::Precondition("cycle encoding needs n >= 5".into()));
    }
    let host = oscillation(n);
    let g = inversion_graph(&host);
    let word = host.values().iter().map(|&x| if g.degree(x) == 1 { 2 } else { 1 }).collect();
    PermLettering::new(2, word, host, [(1, 1), (1, 2), (2, 1)], [(2, 2)])
}

/// The counting argument behind the linear lower bound, evaluated exactly at
/// one `n` and `k = ⌊αn⌋`.
#[derive(Clone, Debug, Serialize)]
pub struct CountingBound {
    pub n: usize,
    pub alpha: f64,
    pub k: usize,
    /// `log2` of the number of labelled graphs, `C(n,2)`.
    pub graphs_log2: u64,
    /// `(n!)² · k^n · 2^{2k²}`, exactly.
    #[serde(serialize_with = "decimal")]
    pub letterings: BigUint,
    pub letterings_log2: f64,
    /// `log2(n^{2n} (αn)^n 2^{2(αn)²})`.
    pub relaxed_log2: f64,
    /// More labelled graphs than letterings: some graph needs more than `k` letters.
    pub exceeds: bool,
}

fn decimal<S: serde::Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

pub fn counting_bound(n: usize, alpha: f64) -> Result<CountingBound> {
    if !(alpha > 0.0 && alpha < 0.5) || n == 0 {
        return Err(Error::Precondition("need n >= 1 and 0 < alpha < 1/2".into()));
    }
    let k = (alpha * n as f64).floor() as usize;
    let fact: BigUint = (1..=n as u64).map(BigUint::from).product::<BigUint>().max(BigUint::one());
    let letterings = &fact * &fact * BigUint::from(k as u64).pow(n as u32) * (BigUint::one() << (2 * k * k));
    let graphs_log2 = (n * n.saturating_sub(1) / 2) as u64;
    let graphs = BigUint::one() << graphs_log2;
    let log2 = |x: &BigUint| {
        let bits = x.bits();
        if bits <= 1000 {
            x.to_f64().map_or(f64::INFINITY, f64::log2)
        } else {
            // Keep the top 64 bits.
            let shift = bits - 64;
            (x >> shift).to_f64().unwrap().log2() + shift as f64
        }
    };
    let nf = n as f64;
    let relaxed_log2 = 2.0 * nf * nf.log2() + nf * (alpha * nf).log2() + 2.0 * (alpha * nf).powi(2);
    Ok(CountingBound {
        n,
        alpha,
        k,
        graphs_log2,
        letterings_log2: if k == 0 { f64::NEG_INFINITY } else { log2(&letterings) },
        exceeds: graphs > letterings,
        letterings,
        relaxed_log2,
    })
}
