//! Letter-saving constructions: words of the form `ℓ_1 … ℓ_k ℓ_{σ(1)} … ℓ_{σ(k)}`
//! in which every letter encodes two vertices.

use std::collections::BTreeSet;

use super::{Encoding, Lettering};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::prime::is_chain;

/// The decoder forced by placing `order` under `word`, or `None` if two
/// pairs of positions with the same letter pair disagree.
fn infer_decoder(g: &SimpleGraph, word: &[usize], order: &[usize]) -> Option<BTreeSet<(usize, usize)>> {
    let mut seen = std::collections::HashMap::new();
    for j in 0..word.len() {
        for i in 0..j {
            let edge = g.has_edge(order[i], order[j]);
            if *seen.entry((word[i], word[j])).or_insert(edge) != edge {
                return None;
            }
        }
    }
    Some(seen.into_iter().filter(|&(_, e)| e).map(|(p, _)| p).collect())
}

/// Letters of the two halves, if each half uses every letter `1..=k` once.
fn halves(l: &Lettering) -> Option<(usize, &[usize], &[usize])> {
    let w = l.word();
    if w.len() % 2 != 0 {
        return None;
    }
    let k = w.len() / 2;
    let (a, b) = w.split_at(k);
    let full = |h: &[usize]| h.iter().collect::<BTreeSet<_>>().len() == k && h.iter().all(|&x| x <= k);
    (l.k() == k && full(a) && full(b)).then_some((k, a, b))
}

/// Extends an encoding of `g[h]` whose word has the two-halves shape to all of
/// `g`: every vertex outside `h`, in increasing order, gets a fresh letter in
/// the middle of the word. A fresh letter `λ` sees each old letter once on its
/// left and once on its right, and every other fresh letter once, so the
/// decoder entries involving `λ` are read straight off the graph.
pub fn extend_lettering(g: &SimpleGraph, h: &[usize], inner: &Encoding) -> Result<Encoding> {
    let (k, _, _) = halves(&inner.lettering)
        .ok_or_else(|| Error::Precondition("inner word must list each letter once per half".into()))?;
    let hs: BTreeSet<usize> = h.iter().copied().collect();
    if inner.order.iter().copied().collect::<BTreeSet<_>>() != hs || hs.len() != inner.order.len() {
        return Err(Error::Precondition("inner encoding must place exactly the vertices of h".into()));
    }
    if !inner.encodes(g) {
        return Err(Error::Precondition("inner encoding does not encode g[h]".into()));
    }
    let rest: Vec<usize> = (1..=g.n()).filter(|v| !hs.contains(v)).collect();
    let (left, right) = inner.order.split_at(k);
    let (lw, rw) = inner.lettering.word().split_at(k);

    let mut decoder: BTreeSet<(usize, usize)> = inner.lettering.decoder().collect();
    for (t, &w) in rest.iter().enumerate() {
        let lam = k + 1 + t;
        for (&x, &a) in left.iter().zip(lw) {
            if g.has_edge(x, w) {
                decoder.insert((a, lam));
            }
        }
        for (&y, &a) in right.iter().zip(rw) {
            if g.has_edge(w, y) {
                decoder.insert((lam, a));
            }
        }
        for (s, &w2) in rest.iter().enumerate().skip(t + 1) {
            if g.has_edge(w, w2) {
                decoder.insert((lam, k + 1 + s));
            }
        }
    }
    let mut word = lw.to_vec();
    word.extend(k + 1..=k + rest.len());
    word.extend_from_slice(rw);
    let mut order = left.to_vec();
    order.extend(&rest);
    order.extend_from_slice(right);
    let lettering = Lettering::new(k + rest.len(), word, decoder)?;
    let out = Encoding { lettering, order };
    debug_assert!(out.encodes(g));
    Ok(out)
}

/// Builds `H` two vertices at a time with the palindromic word
/// `ℓ_1 … ℓ_k ℓ_k … ℓ_1`, where `ℓ_i` encodes `x_i` on the left and `y_i` on
/// the right.
///
/// Start from `x_1 = 1, y_1 = 2`. While two outside vertices `u < v` have the
/// same neighbours in `H` (least such pair first), put `ℓ_{k+1} ℓ_{k+1}` in the
/// middle for `u, v`. Agreement on `H` is exactly what lets one new letter
/// serve both: `(ℓ_i, ℓ_{k+1}) ∈ D` iff `x_i ~ u`, `(ℓ_{k+1}, ℓ_i) ∈ D` iff
/// `u ~ y_i`, and `(ℓ_{k+1}, ℓ_{k+1}) ∈ D` iff `u ~ v`. Pigeonhole guarantees a
/// pair while more than `2^{|H|}` vertices remain outside.
pub fn palindromic_savings(g: &SimpleGraph) -> Result<(Vec<usize>, Encoding)> {
    if g.n() < 2 {
        return Err(Error::Precondition("needs at least two vertices".into()));
    }
    let mut xs = vec![1];
    let mut ys = vec![2];
    let mut decoder = BTreeSet::new();
    if g.has_edge(1, 2) {
        decoder.insert((1, 1));
    }
    loop {
        let in_h: u64 = xs.iter().chain(&ys).fold(0, |m, &v| m | 1 << (v - 1));
        let outside: Vec<usize> = (1..=g.n()).filter(|&v| in_h >> (v - 1) & 1 == 0).collect();
        let pair = outside.iter().enumerate().find_map(|(i, &u)| {
            outside[i + 1..].iter().find(|&&v| g.neighbor_mask(u) & in_h == g.neighbor_mask(v) & in_h).map(|&v| (u, v))
        });
        let Some((u, v)) = pair else { break };
        let new = xs.len() + 1;
        for (i, (&x, &y)) in xs.iter().zip(&ys).enumerate() {
            if g.has_edge(x, u) {
                decoder.insert((i + 1, new));
            }
            if g.has_edge(u, y) {
                decoder.insert((new, i + 1));
            }
        }
        if g.has_edge(u, v) {
            decoder.insert((new, new));
        }
        xs.push(u);
        ys.push(v);
    }
    let k = xs.len();
    let word: Vec<usize> = (1..=k).chain((1..=k).rev()).collect();
    let order: Vec<usize> = xs.iter().copied().chain(ys.iter().rev().copied()).collect();
    let mut h = order.clone();
    h.sort_unstable();
    let enc = Encoding { lettering: Lettering::new(k, word, decoder)?, order };
    debug_assert!(enc.encodes(g));
    Ok((h, enc))
}

/// Encodes `g[p_1, …, p_{2k}]` for a chain `p` with one letter per consecutive
/// pair, on a word whose two halves each list every letter once.
///
/// The last placed vertex always sits at one end of the word. The next pair
/// `a = p_{2t+1}, b = p_{2t+2}` shares a fresh letter. When `a` and `b` are
/// both pendants or both antipendants, `a` goes in the middle and `b` at the
/// same end as `p_{2t}`; otherwise `a` goes right next to `p_{2t}` and `b` at
/// the opposite end.
pub fn encode_chain(g: &SimpleGraph, chain: &[usize]) -> Result<Encoding> {
    if chain.len() < 2 || chain.len() % 2 != 0 || !is_chain(g, chain) {
        return Err(Error::Precondition("expected a chain of even length".into()));
    }
    let mut word = vec![1, 1];
    let mut order = vec![chain[0], chain[1]];
    for t in 1..chain.len() / 2 {
        let (prev, a, b) = (chain[2 * t - 1], chain[2 * t], chain[2 * t + 1]);
        let lam = t + 1;
        let same_kind = g.has_edge(a, prev) == g.has_edge(b, a);
        let mid = order.len() / 2;
        let at_end = *order.last().unwrap() == prev;
        if !at_end && order[0] != prev {
            return Err(Error::Precondition("chain placement lost the last vertex".into()));
        }
        // Indices in the final word of length 2t + 2.
        let (ia, ib) = match (same_kind, at_end) {
            (true, true) => (mid, order.len() + 1),
            (true, false) => (mid + 1, 0),
            (false, true) => (order.len(), 0),
            (false, false) => (1, order.len() + 1),
        };
        for (i, v) in if ia < ib { [(ia, a), (ib, b)] } else { [(ib, b), (ia, a)] } {
            word.insert(i, lam);
            order.insert(i, v);
        }
    }
    let decoder = infer_decoder(g, &word, &order)
        .ok_or_else(|| Error::Precondition("chain placement produced an inconsistent decoder".into()))?;
    let k = chain.len() / 2;
    let enc = Encoding { lettering: Lettering::new(k, word, decoder)?.normalized(), order };
    debug_assert!(enc.encodes(g));
    Ok(enc)
}
