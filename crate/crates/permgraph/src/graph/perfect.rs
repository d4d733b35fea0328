use super::{bits, SimpleGraph};
use crate::error::{check_cap, Result};

pub const PERFECT_CAP: usize = 8;

/// Size of a largest clique.
pub fn clique_number(g: &SimpleGraph) -> usize {
    clique_in(g, g.all_mask())
}

fn clique_in(g: &SimpleGraph, cand: u64) -> usize {
    if cand == 0 {
        return 0;
    }
    let v = cand.trailing_zeros() as usize + 1;
    let rest = cand & !(1 << (v - 1));
    let with = 1 + clique_in(g, rest & g.neighbor_mask(v));
    if with as u32 > rest.count_ones() {
        return with;
    }
    with.max(clique_in(g, rest))
}

/// Least number of colours in a proper colouring.
pub fn chromatic_number(g: &SimpleGraph) -> usize {
    chromatic_in(g, g.all_mask())
}

fn chromatic_in(g: &SimpleGraph, mask: u64) -> usize {
    if mask == 0 {
        return 0;
    }
    let vs: Vec<usize> = bits(mask).collect();
    let mut k = clique_in(g, mask).max(1);
    loop {
        let mut colour = vec![usize::MAX; g.n() + 1];
        if colourable(g, &vs, 0, k, &mut colour, 0) {
            return k;
        }
        k += 1;
    }
}

fn colourable(g: &SimpleGraph, vs: &[usize], i: usize, k: usize, colour: &mut [usize], used: usize) -> bool {
    if i == vs.len() {
        return true;
    }
    let v = vs[i];
    // A fresh colour is only worth trying once.
    for c in 0..k.min(used + 1) {
        if bits(g.neighbor_mask(v)).any(|u| colour[u] == c) {
            continue;
        }
        colour[v] = c;
        if colourable(g, vs, i + 1, k, colour, used.max(c + 1)) {
            return true;
        }
        colour[v] = usize::MAX;
    }
    false
}

/// Checks `χ(H) = ω(H)` on every induced subgraph `H` directly.
pub fn is_perfect(g: &SimpleGraph) -> Result<bool> {
    check_cap("perfection check", g.n(), PERFECT_CAP)?;
    for mask in 1..=g.all_mask() {
        if chromatic_in(g, mask) != clique_in(g, mask) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let c5 = SimpleGraph::cycle(5);
        assert_eq!((chromatic_number(&c5), clique_number(&c5)), (3, 2));
        assert!(!is_perfect(&c5).unwrap());
        assert!(is_perfect(&SimpleGraph::complete(5)).unwrap());
        assert!(is_perfect(&SimpleGraph::path(7)).unwrap());
        assert!(!is_perfect(&SimpleGraph::cycle(7)).unwrap());
        assert!(is_perfect(&SimpleGraph::cycle(6)).unwrap());
        assert_eq!(chromatic_number(&SimpleGraph::empty(3)), 1);
    }
}
