//! The sixteen acceptance checks.
//!
//! Each check returns a one-line summary on success and the first
//! counterexample on failure. Checks run in parallel but results come back in
//! criterion order.

use num_rational::Rational64;
use permgraph::graph::{generate_all_graphs, is_isomorphic, is_perfect, SimpleGraph};
use permgraph::grid::{
    descent_expectations, drawing_to_lettering, enumerate_descent_means, min_monotone_runs, monotone_run_drawing,
};
use permgraph::invgraph::{equivalent_permutations, inversion_graph, recognize};
use permgraph::letters::{decode, encode_chain, lettericity_exact, palindromic_savings, Lettering};
use permgraph::perm::{descent_profile, inversion_polynomial, is_log_concave, is_simple, lehmer_decode, lehmer_encode};
use permgraph::permletters::{counting_bound, decode_perm, ell_perm_exact, PermLettering};
use permgraph::prime::{edge_classes, find_chain, is_prime, transitive_orientations};
use permgraph::reflect::{
    apply_reflection, bfs_to_edgeless, bruhat_distance, cyclic_empty, find_induced_cycle, greedy_empty,
    min_edge_edge_cover, reduction_to_reflection, replay, EdgeDistances,
};
use permgraph::{graph::automorphism_count, Permutation};
use rayon::prelude::*;
use serde::Serialize;

use crate::experiment;

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub id: usize,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl Outcome {
    pub fn line(&self) -> String {
        let tag = if self.pass { "PASS" } else { "FAIL" };
        format!("{tag} {:>2} {}: {}", self.id, self.name, self.detail)
    }
}

type Check = fn() -> Result<String, String>;

pub const CRITERIA: [(&str, Check); 16] = [
    ("lehmer codes", c01_lehmer),
    ("inversion polynomial", c02_polynomial),
    ("simple iff prime", c03_simple_prime),
    ("prime graph edge classes", c04_prime_classes),
    ("uniqueness of simple permutations", c05_uniqueness),
    ("perfection", c06_perfect),
    ("lettericity values", c07_lettericity),
    ("gridding bound", c08_gridding),
    ("descent expectations", c09_expectations),
    ("permutation letter graphs", c10_perm_letters),
    ("reflection families", c11_families),
    ("mixed reflections", c12_mixed),
    ("reductions and bounds", c13_reductions),
    ("constructive emptying", c14_constructive),
    ("letter-saving constructions", c15_savings),
    ("seeded reports", c16_reports),
];

pub fn run_one(id: usize) -> Outcome {
    let (name, check) = CRITERIA[id - 1];
    let (pass, detail) = match check() {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Outcome { id, name, pass, detail }
}

pub fn run_all() -> Vec<Outcome> {
    (1..=CRITERIA.len()).into_par_iter().map(run_one).collect()
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn catalog(lo: usize, hi: usize) -> Vec<SimpleGraph> {
    (lo..=hi).flat_map(|n| generate_all_graphs(n).expect("within catalog cap")).map(|f| f.to_graph()).collect()
}

fn perm(s: &str) -> Permutation {
    s.parse().expect("literal permutation")
}

fn ell(g: &SimpleGraph) -> usize {
    lettericity_exact(g, 5).expect("within cap").expect("five letters suffice up to n = 7").lettering.k()
}

fn e<T>(r: permgraph::Result<T>) -> Result<T, String> {
    r.map_err(|err| err.to_string())
}

fn c01_lehmer() -> Result<String, String> {
    let code = lehmer_encode(&perm("37168254"));
    ensure!(code.entries() == [2, 5, 0, 3, 3, 0, 1, 0], "c(37168254) = {code}");
    let mut count = 0;
    for (rank, p) in Permutation::all(7).enumerate() {
        let c = lehmer_encode(&p);
        ensure!(lehmer_decode(&c) == p, "round trip fails at {p}");
        ensure!(c.rank() == rank as u128, "rank of {p} is {}", c.rank());
        count += 1;
    }
    Ok(format!("c(37168254) = {code}; {count} round trips in S7"))
}

fn c02_polynomial() -> Result<String, String> {
    for n in 1..=8 {
        let mut hist = vec![0u64; n * (n - 1) / 2 + 1];
        for p in Permutation::all(n) {
            hist[p.length()] += 1;
        }
        let poly = e(inversion_polynomial(n))?;
        ensure!(poly == hist, "n = {n}: {poly:?} vs {hist:?}");
    }
    for n in 3..=10 {
        ensure!(is_log_concave(&e(inversion_polynomial(n))?), "not log-concave at n = {n}");
    }
    Ok("histograms match for n <= 8; log-concave for 3 <= n <= 10".into())
}

fn c03_simple_prime() -> Result<String, String> {
    let mut simple = 0;
    for p in Permutation::all(6) {
        let s = is_simple(&p);
        ensure!(s == is_prime(&inversion_graph(&p)), "disagree at {p}");
        simple += s as usize;
    }
    Ok(format!("720 permutations agree, {simple} simple"))
}

fn c04_prime_classes() -> Result<String, String> {
    let primes: Vec<SimpleGraph> = catalog(3, 7).into_iter().filter(is_prime).collect();
    let results: Vec<Result<u64, String>> = primes
        .par_iter()
        .map(|g| {
            let classes = edge_classes(g).len();
            ensure!(classes == 1, "{g} has {classes} edge classes");
            let count = e(transitive_orientations(g))?.count;
            ensure!(count == 0 || count == 2, "{g} has {count} transitive orientations");
            Ok(count)
        })
        .collect();
    let counts = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    let two = counts.iter().filter(|&&c| c == 2).count();
    Ok(format!("{} prime graphs on 3..=7 vertices, {two} with 2 orientations", counts.len()))
}

fn c05_uniqueness() -> Result<String, String> {
    let mut checked = 0;
    for p in Permutation::all(6).filter(is_simple) {
        let rc = p.reverse_complement();
        let mut images = vec![p.clone(), p.inverse(), rc.inverse(), rc];
        images.sort();
        images.dedup();
        let eq = e(equivalent_permutations(&p))?;
        ensure!(eq == images, "{p}: equivalents {eq:?}");
        let aut = e(automorphism_count(&inversion_graph(&p)))?;
        ensure!([1, 2, 4].contains(&aut), "{p}: |Aut| = {aut}");
        checked += 1;
    }
    Ok(format!("{checked} simple permutations in S6"))
}

fn c06_perfect() -> Result<String, String> {
    let all: Vec<Permutation> = Permutation::all(7).collect();
    let bad = all.par_iter().find_first(|p| !is_perfect(&inversion_graph(p)).unwrap_or(false));
    ensure!(bad.is_none(), "G_π not perfect for {}", bad.unwrap());
    Ok(format!("{} inversion graphs perfect", all.len()))
}

fn c07_lettericity() -> Result<String, String> {
    ensure!(ell(&SimpleGraph::matching(2)) == 2, "ℓ(2K2) != 2");
    ensure!(ell(&SimpleGraph::matching(3)) == 3, "ℓ(3K2) != 3");
    for n in 3..=7 {
        let l = ell(&SimpleGraph::path(n));
        ensure!(l == (n + 4) / 3, "ℓ(P{n}) = {l}");
    }
    for n in 1..=7 {
        ensure!(ell(&SimpleGraph::complete(n)) == 1, "ℓ(K{n}) != 1");
    }
    let threshold = decode(&e(Lettering::new(2, vec![1, 2, 1, 1, 2, 2], [(1, 2), (2, 2)]))?);
    ensure!(ell(&threshold) == 2, "threshold graph needs {} letters", ell(&threshold));
    Ok("2K2, 3K2, P3..P7, K1..K7 and abaabb as expected".into())
}

fn c08_gridding() -> Result<String, String> {
    let all: Vec<Permutation> = Permutation::all(6).collect();
    let res: Result<Vec<()>, String> = all
        .par_iter()
        .map(|p| {
            let g = inversion_graph(p);
            let enc = e(drawing_to_lettering(&monotone_run_drawing(p)))?;
            ensure!(e(is_isomorphic(&decode(&enc.lettering), &g))?, "{p}: drawing decodes wrongly");
            ensure!(enc.lettering.k() <= 3, "{p}: drawing uses {} letters", enc.lettering.k());
            ensure!(ell(&g) <= 3, "{p}: ℓ(G_π) = {}", ell(&g));
            Ok(())
        })
        .collect();
    res?;
    Ok("720 drawings decode to G_π with at most 3 letters".into())
}

fn c09_expectations() -> Result<String, String> {
    let mut runs = Vec::new();
    for n in [6, 7] {
        let (means, exact) = e(enumerate_descent_means(n))?;
        let closed = e(descent_expectations(n))?;
        ensure!(
            (means.x_d, means.x_ddd, means.x_ddadd) == (closed.x_d, closed.x_ddd, closed.x_ddadd),
            "n = {n}: means {means:?}"
        );
        let nn = n as i64;
        ensure!(closed.x_d == Rational64::new(nn - 1, 2), "closed E[X_d]");
        ensure!(closed.x_ddd == Rational64::new(nn - 3, 24), "closed E[X_ddd]");
        ensure!(closed.x_ddadd == Rational64::new(19 * (nn - 5), 720), "closed E[X_ddadd]");
        ensure!(exact <= closed.bound, "n = {n}: E[X_r] = {exact} > {}", closed.bound);
        runs.push(format!("E[X_r]({n}) = {exact} <= {}", closed.bound));
    }
    for p in Permutation::all(7) {
        let s = descent_profile(&p);
        ensure!(min_monotone_runs(&p) + s.x_ddd + s.x_ddadd <= 1 + s.x_d, "pointwise bound fails at {p}");
    }
    Ok(runs.join("; "))
}

fn c10_perm_letters() -> Result<String, String> {
    let ex = e(PermLettering::new(3, vec![1, 1, 2, 3, 3, 2], perm("253614"), [(1, 2), (2, 3)], [(1, 3), (2, 3)]))?;
    let edges = decode_perm(&ex).edges();
    ensure!(edges == [(1, 4), (2, 3), (2, 4), (2, 6), (3, 4), (3, 5)], "three-letter example decodes to {edges:?}");
    let c5 = e(ell_perm_exact(&SimpleGraph::cycle(5)))?.lettering.k();
    ensure!(c5 == 2, "ℓ_perm(C5) = {c5}");
    let graphs = catalog(1, 5);
    let res: Result<Vec<()>, String> = graphs
        .par_iter()
        .map(|g| {
            let enc = e(ell_perm_exact(g))?;
            let k = enc.lettering.k();
            ensure!(enc.encodes(g), "{g}: witness does not decode");
            ensure!(k <= g.n().div_ceil(2), "{g}: ℓ_perm = {k}");
            ensure!((k == 1) == e(recognize(g))?.is_some(), "{g}: ℓ_perm = {k} disagrees with recognition");
            Ok(())
        })
        .collect();
    res?;
    Ok(format!("three-letter example, C5 and {} graphs on n <= 5", graphs.len()))
}

fn c11_families() -> Result<String, String> {
    let bfs = |g: &SimpleGraph| e(bfs_to_edgeless(g, false)).map(|r| r.0);
    for n in 3..=7 {
        ensure!(bfs(&SimpleGraph::cycle(n))? == n - 2, "C{n}");
    }
    for n in 1..=7 {
        ensure!(bfs(&SimpleGraph::complete(n))? == n / 2, "K{n}");
    }
    ensure!(bfs(&SimpleGraph::complete_bipartite(3, 3))? == 3, "K3,3");
    for k in 0..=5 {
        ensure!(bfs(&SimpleGraph::nested_triangle(k))? == 1, "N{k}");
    }
    let mut memo = EdgeDistances::new();
    let mut forests = 0;
    for g in catalog(1, 7).into_iter().filter(|g| g.n() <= 6 || g.is_forest()) {
        let d = e(memo.distance(&g))?;
        if g.is_forest() {
            ensure!(d == g.edge_count(), "forest {g}: distance {d}");
            forests += 1;
        }
        if g.n() <= 6 {
            ensure!((d + 1 == g.n()) == g.is_tree(), "{g}: distance {d}");
        }
    }
    Ok(format!("families as expected; {forests} forests on n <= 7"))
}

fn c12_mixed() -> Result<String, String> {
    let p6 = SimpleGraph::path(6);
    let (edge, ts) = e(bfs_to_edgeless(&p6, false))?;
    let (mixed, ms) = e(bfs_to_edgeless(&p6, true))?;
    ensure!(edge == 5 && mixed == 3, "P6: {edge} edge-only, {mixed} mixed");
    ensure!(e(replay(&p6, &ts))?.edge_count() == 0 && e(replay(&p6, &ms))?.edge_count() == 0, "witness replay");
    Ok("P6: 5 edge-only, 3 mixed".into())
}

fn c13_reductions() -> Result<String, String> {
    for p in Permutation::all(5) {
        let g = inversion_graph(&p);
        for (i, j) in p.inversions() {
            let t = e(reduction_to_reflection(&p, (i, j)))?;
            ensure!(e(apply_reflection(&g, &t))? == inversion_graph(&p.swap_indices(i, j)), "{p} at ({i},{j})");
        }
        ensure!(e(bruhat_distance(&p))? == p.absolute_length(), "Bruhat distance of {p}");
    }
    let mut memo = EdgeDistances::new();
    for p in Permutation::all(6) {
        let g = inversion_graph(&p);
        let d = e(memo.distance(&g))?;
        ensure!(d <= p.absolute_length(), "{p}: distance {d} > l'");
        ensure!((p.length() == p.absolute_length()) == g.is_forest(), "{p}: l = l' disagrees with forest");
    }
    Ok("S5 strips commute and Bruhat distance = l'; S6 bounds hold".into())
}

fn c14_constructive() -> Result<String, String> {
    let graphs = catalog(1, 6);
    let mut memo = EdgeDistances::new();
    let mut cyclic = 0;
    for g in &graphs {
        let n = g.n();
        let greedy = greedy_empty(g);
        ensure!(greedy.len() <= n.saturating_sub(1), "{g}: greedy used {}", greedy.len());
        ensure!(e(replay(g, &greedy))?.edge_count() == 0, "{g}: greedy replay");
        if find_induced_cycle(g).is_some() {
            let c = e(cyclic_empty(g))?;
            ensure!(c.reflections.len() <= n - 2, "{g}: cyclic used {}", c.reflections.len());
            ensure!(e(replay(g, &c.reflections))?.edge_count() == 0, "{g}: cyclic replay");
            cyclic += 1;
        }
        let d = e(memo.distance(g))?;
        let cover = e(min_edge_edge_cover(g))?;
        ensure!(cover <= d, "{g}: cover {cover} > distance {d}");
    }
    Ok(format!("{} graphs, {cyclic} with a cycle", graphs.len()))
}

fn c15_savings() -> Result<String, String> {
    let sevens = catalog(7, 7);
    let res: Result<Vec<()>, String> = sevens
        .par_iter()
        .map(|g| {
            let (_, enc) = e(palindromic_savings(g))?;
            ensure!(enc.lettering.k() >= 2, "{g}: palindrome with {} letters", enc.lettering.k());
            ensure!(enc.encodes(g), "{g}: palindrome does not decode");
            Ok(())
        })
        .collect();
    res?;
    let mut chains = 0;
    for g in catalog(1, 6).into_iter().filter(is_prime) {
        let n = g.n();
        for u in 1..=n {
            for v in 1..=n {
                for w in 1..=n {
                    let Some(c) = find_chain(&g, u, v, w) else {
                        continue;
                    };
                    for len in (2..=c.len().min(6)).step_by(2) {
                        let enc = e(encode_chain(&g, &c[..len]))?;
                        ensure!(enc.encodes(&g), "{g}: chain {:?} does not decode", &c[..len]);
                        chains += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{} graphs on 7 vertices; {chains} chain prefixes", sevens.len()))
}

fn c16_reports() -> Result<String, String> {
    let runs = |seed| -> Result<String, String> {
        let reports = [
            e(experiment::random_lettericity(6, 20, seed))?,
            e(experiment::three_same_letter(7, 500, seed))?,
            e(experiment::separated_pairs(8, 500, seed))?,
            e(experiment::monotone_runs(7, 500, seed))?,
        ];
        Ok(serde_json::to_string(&reports).expect("reports serialise"))
    };
    ensure!(runs(7)? == runs(7)?, "same seed gave different reports");
    ensure!(experiment::three_quarters_pow(4).to_string() == "81/256", "(3/4)^4");
    ensure!(experiment::three_quarters_pow(0).to_string() == "1", "(3/4)^0");
    let b7 = e(descent_expectations(7))?.bound;
    ensure!(b7 == Rational64::new(1361, 360), "311*7/720 + 109/144 = {b7}");
    let cb = e(counting_bound(200, 0.25))?;
    ensure!(cb.k == 50 && cb.graphs_log2 == 19900 && cb.exceeds, "counting bound at n = 200: {cb:?}");
    Ok("reports reproducible; reference arithmetic exact".into())
}
