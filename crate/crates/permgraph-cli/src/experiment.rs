//! Seeded Monte Carlo reports.
//!
//! Sample `i` draws from its own ChaCha stream of the given seed, so a report
//! depends only on `(n, samples, seed)` and not on how the work is scheduled.

use num_bigint::BigUint;
use num_rational::Ratio;
use permgraph::graph::SimpleGraph;
use permgraph::grid::{descent_expectations, enumerate_descent_means, min_monotone_runs, EXPECTATION_ENUM_CAP};
use permgraph::letters::random_lettericity_trial;
use permgraph::{Error, Permutation};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

pub const EXPERIMENT_CAP: usize = 40;

fn rng(seed: u64, i: usize) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(i as u64);
    r
}

/// `x` rounded to six significant digits.
pub fn sig6(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.5e}").parse().expect("formatted float parses")
}

/// `(3/4)^e` exactly.
pub fn three_quarters_pow(e: u32) -> Ratio<BigUint> {
    Ratio::new(BigUint::from(3u32).pow(e), BigUint::from(4u32).pow(e))
}

fn ratio_f64(r: &Ratio<BigUint>) -> f64 {
    // Both parts stay far below f64 overflow for the sizes allowed here.
    let f = |b: &BigUint| b.to_string().parse::<f64>().expect("decimal parses");
    f(r.numer()) / f(r.denom())
}

fn falling(n: usize, k: usize) -> u64 {
    (0..k).map(|i| (n - i) as u64).product()
}

fn agree(g: &SimpleGraph, v: usize, a: usize, b: usize) -> bool {
    g.has_edge(v, a) == g.has_edge(v, b)
}

/// Every other vertex has somewhere to go in a word `… x … y … z …` with
/// `x, y, z` sharing a letter: it must not agree on `x, z` while disagreeing
/// with `y`.
fn triple_fits(g: &SimpleGraph, x: usize, y: usize, z: usize) -> bool {
    (1..=g.n()).filter(|&v| v != x && v != y && v != z).all(|v| !(agree(g, v, x, z) && !agree(g, v, x, y)))
}

/// Every other vertex has somewhere to go in `… x … y … s … t …` with `x, y`
/// and `s, t` sharing letters: it must agree on one of the two pairs.
fn separated_fits(g: &SimpleGraph, x: usize, y: usize, s: usize, t: usize) -> bool {
    (1..=g.n()).filter(|&v| ![x, y, s, t].contains(&v)).all(|v| agree(g, v, x, y) || agree(g, v, s, t))
}

fn check(n: usize, lo: usize, hi: usize, samples: usize) -> Result<(), Error> {
    if n < lo {
        return Err(Error::Precondition(format!("needs n >= {lo}")));
    }
    if n > hi {
        return Err(Error::SizeCap { what: "experiment", n, cap: hi });
    }
    if samples == 0 {
        return Err(Error::Precondition("needs at least one sample".into()));
    }
    Ok(())
}

pub fn random_lettericity(n: usize, samples: usize, seed: u64) -> Result<Value, Error> {
    check(n, 1, permgraph::letters::LETTERICITY_CAP, samples)?;
    let t = random_lettericity_trial(n, samples, seed)?;
    Ok(json!({
        "experiment": "random-lettericity",
        "n": n,
        "samples": samples,
        "seed": seed,
        "histogram": t.histogram,
        "mean": sig6(t.mean),
        "reference_n_minus_2log2n": sig6(t.reference),
    }))
}

/// How often the fixed triple `1, 2, 3` passes the placement test in
/// `G(n, 1/2)`, against `(3/4)^(n-3)`; and how often some ordered triple does,
/// against the union bound.
pub fn three_same_letter(n: usize, samples: usize, seed: u64) -> Result<Value, Error> {
    check(n, 4, EXPERIMENT_CAP, samples)?;
    let hits: Vec<(bool, bool)> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let g = SimpleGraph::random(n, 0.5, &mut rng(seed, i));
            let fixed = triple_fits(&g, 1, 2, 3);
            let any = (1..=n)
                .any(|x| (1..=n).any(|y| y != x && (1..=n).any(|z| z != x && z != y && triple_fits(&g, x, y, z))));
            (fixed, any)
        })
        .collect();
    let fixed = hits.iter().filter(|h| h.0).count();
    let any = hits.iter().filter(|h| h.1).count();
    let reference = three_quarters_pow(n as u32 - 3);
    Ok(json!({
        "experiment": "three-same-letter",
        "n": n,
        "samples": samples,
        "seed": seed,
        "fixed_triple_frequency": sig6(fixed as f64 / samples as f64),
        "reference": reference.to_string(),
        "reference_value": sig6(ratio_f64(&reference)),
        "any_triple_frequency": sig6(any as f64 / samples as f64),
        "union_bound": sig6(falling(n, 3) as f64 * ratio_f64(&reference)),
    }))
}

/// As [`three_same_letter`] for the separated pattern `x y s t` of two
/// repeated letters, against `(3/4)^(n-4)`.
pub fn separated_pairs(n: usize, samples: usize, seed: u64) -> Result<Value, Error> {
    check(n, 5, EXPERIMENT_CAP, samples)?;
    let hits: Vec<bool> = (0..samples)
        .into_par_iter()
        .map(|i| separated_fits(&SimpleGraph::random(n, 0.5, &mut rng(seed, i)), 1, 2, 3, 4))
        .collect();
    let fixed = hits.iter().filter(|&&h| h).count();
    let reference = three_quarters_pow(n as u32 - 4);
    Ok(json!({
        "experiment": "separated-pairs",
        "n": n,
        "samples": samples,
        "seed": seed,
        "fixed_quadruple_frequency": sig6(fixed as f64 / samples as f64),
        "reference": reference.to_string(),
        "reference_value": sig6(ratio_f64(&reference)),
        "union_bound": sig6(falling(n, 4) as f64 * ratio_f64(&reference)),
    }))
}

/// Sampled mean of the fewest monotone runs, next to the exact mean (when
/// `n` is small enough to enumerate) and the closed-form bound.
pub fn monotone_runs(n: usize, samples: usize, seed: u64) -> Result<Value, Error> {
    check(n, 6, EXPERIMENT_CAP, samples)?;
    let total: usize = (0..samples)
        .into_par_iter()
        .map(|i| {
            let mut v: Vec<usize> = (1..=n).collect();
            v.shuffle(&mut rng(seed, i));
            min_monotone_runs(&Permutation::new(v).expect("shuffled identity"))
        })
        .sum();
    let bound = descent_expectations(n)?.bound;
    let exact = if n <= EXPECTATION_ENUM_CAP.min(7) { Some(enumerate_descent_means(n)?.1.to_string()) } else { None };
    Ok(json!({
        "experiment": "monotone-runs",
        "n": n,
        "samples": samples,
        "seed": seed,
        "estimate": sig6(total as f64 / samples as f64),
        "exact": exact,
        "bound": bound.to_string(),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        assert_eq!(sig6(0.1779785156), 0.177979);
        assert_eq!(sig6(123456789.0), 123457000.0);
        assert_eq!(sig6(0.0), 0.0);
    }

    #[test]
    fn placement_tests() {
        // Vertex 4 agrees on 1 and 3 but not on 2.
        let g = SimpleGraph::from_edges(4, &[(1, 4), (3, 4)]).unwrap();
        assert!(!triple_fits(&g, 1, 2, 3));
        assert!(triple_fits(&g, 1, 3, 2));
        let h = SimpleGraph::from_edges(5, &[(1, 5), (3, 5)]).unwrap();
        assert!(!separated_fits(&h, 1, 2, 3, 4));
        assert!(separated_fits(&h, 1, 3, 2, 4));
    }

    #[test]
    fn reference_curve() {
        assert_eq!(three_quarters_pow(4).to_string(), "81/256");
        let r = three_same_letter(7, 2000, 1).unwrap();
        let f = r["fixed_triple_frequency"].as_f64().unwrap();
        assert!((f - 81.0 / 256.0).abs() < 0.05, "{f}");
    }
}
