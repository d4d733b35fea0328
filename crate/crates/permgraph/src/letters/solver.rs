//! Exact lettericity by backtracking.
//!
//! Positions are filled left to right. Each step picks a letter (never more
//! than one past the largest used so far) and then an unplaced vertex. Every
//! earlier position fixes one decoder entry, so contradictions surface as soon
//! as a vertex is placed. Letters are tried in increasing order before
//! vertices, so the first witness found has the least word.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{Encoding, Lettering};
use crate::error::{check_cap, Result};
use crate::graph::{bits, SimpleGraph};

pub const LETTERICITY_CAP: usize = 7;
pub const LETTERICITY_K_CAP: usize = 5;

/// Fewest cliques and independent sets partitioning the vertices.
/// Each letter class is one of these, so this bounds lettericity from below.
pub fn cochromatic_number(g: &SimpleGraph) -> Result<usize> {
    check_cap("cochromatic number", g.n(), 16)?;
    let n = g.n();
    let full = (1usize << n) - 1;
    let homogeneous: Vec<bool> = (0..=full).map(|m| g.is_clique(m as u64) || g.is_independent(m as u64)).collect();
    let mut best = vec![usize::MAX; full + 1];
    best[0] = 0;
    for m in 1..=full {
        // The part containing the lowest vertex of m.
        let low = m & m.wrapping_neg();
        let rest = m ^ low;
        let mut sub = rest;
        loop {
            let part = sub | low;
            if homogeneous[part] && best[m ^ part] != usize::MAX {
                best[m] = best[m].min(best[m ^ part] + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    Ok(best[full])
}

struct Search<'a> {
    g: &'a SimpleGraph,
    k: usize,
    word: Vec<usize>,
    order: Vec<usize>,
    // dec[(a - 1) * k + (b - 1)]: 0 unknown, 1 in the decoder, -1 not.
    dec: Vec<i8>,
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
                    let idx = (self.word[i] - 1) * self.k + (a - 1);
                    let want = if self.g.has_edge(self.order[i], v) { 1 } else { -1 };
                    match self.dec[idx] {
                        0 => {
                            self.dec[idx] = want;
                            changed.push(idx);
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
                for &idx in &changed {
                    self.dec[idx] = 0;
                }
            }
        }
        false
    }

    fn witness(&self) -> Encoding {
        let k = self.k;
        let used = self.word.iter().copied().max().unwrap_or(0);
        let decoder = (0..k * k)
            .filter(|&i| self.dec[i] == 1)
            .map(|i| (i / k + 1, i % k + 1))
            .filter(|&(a, b)| a <= used && b <= used);
        let lettering = Lettering::new(used, self.word.clone(), decoder).expect("letters in range");
        Encoding { lettering, order: self.order.clone() }
    }
}

fn solve(g: &SimpleGraph, k: usize) -> Option<Encoding> {
    let mut s = Search { g, k, word: Vec::new(), order: Vec::new(), dec: vec![0; k * k] };
    s.run(0, 0).then(|| s.witness())
}

/// The least `k <= k_max` with a `k`-letter encoding of `g`, and the witness
/// whose word is lexicographically least. `None` when `k_max` letters do not suffice.
pub fn lettericity_exact(g: &SimpleGraph, k_max: usize) -> Result<Option<Encoding>> {
    check_cap("lettericity", g.n(), LETTERICITY_CAP)?;
    check_cap("lettericity alphabet", k_max, LETTERICITY_K_CAP)?;
    if g.n() == 0 {
        return Ok(Some(Encoding { lettering: Lettering::new(0, vec![], [])?, order: vec![] }));
    }
    let lower = cochromatic_number(g)?;
    for k in lower..=k_max {
        if let Some(e) = solve(g, k) {
            debug_assert!(e.encodes(g));
            return Ok(Some(e));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, Serialize)]
pub struct LettericityTrial {
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    /// `(lettericity, count)`, ascending.
    pub histogram: Vec<(usize, usize)>,
    pub mean: f64,
    /// `n - 2 log2 n`, for scale only.
    pub reference: f64,
}

/// Exact lettericity of `samples` draws from `G(n, 1/2)`. Sample `i` uses its
/// own ChaCha stream, so results do not depend on evaluation order.
pub fn random_lettericity_trial(n: usize, samples: usize, seed: u64) -> Result<LettericityTrial> {
    check_cap("lettericity trial", n, LETTERICITY_CAP)?;
    let mut histogram = BTreeMap::new();
    let mut total = 0;
    for i in 0..samples {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(i as u64);
        let g = SimpleGraph::random(n, 0.5, &mut rng);
        let l = lettericity_exact(&g, LETTERICITY_K_CAP)?.expect("n <= 7 needs at most 5 letters").lettering.k();
        *histogram.entry(l).or_insert(0) += 1;
        total += l;
    }
    let nf = n as f64;
    Ok(LettericityTrial {
        n,
        samples,
        seed,
        histogram: histogram.into_iter().collect(),
        mean: if samples == 0 { 0.0 } else { total as f64 / samples as f64 },
        reference: if n == 0 { 0.0 } else { nf - 2.0 * nf.log2() },
    })
}
