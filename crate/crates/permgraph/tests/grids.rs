mod common;

use common::perm_strategy;
use num_rational::Rational64;
use permgraph::graph::is_isomorphic;
use permgraph::grid::{
    descent_expectations, drawing_to_lettering, enumerate_descent_means, min_monotone_runs, monotone_run_drawing,
    validate_drawing,
};
use permgraph::invgraph::inversion_graph;
use permgraph::letters::{decode, lettericity_exact};
use permgraph::perm::descent_profile;
use permgraph::Permutation;
use proptest::prelude::*;

#[test]
fn run_drawings_encode_inversion_graphs() {
    for n in 1..=6 {
        for p in Permutation::all(n) {
            let d = monotone_run_drawing(&p);
            assert!(validate_drawing(&d), "{p}");
            let enc = drawing_to_lettering(&d).unwrap();
            let g = inversion_graph(&p);
            assert!(enc.encodes(&g), "{p}");
            assert!(is_isomorphic(&decode(&enc.lettering), &g).unwrap());
            assert!(enc.lettering.k() <= n.div_ceil(2));
        }
    }
}

#[test]
fn exact_means() {
    for n in [6, 7] {
        let (means, runs) = enumerate_descent_means(n).unwrap();
        let closed = descent_expectations(n).unwrap();
        assert_eq!((means.x_d, means.x_ddd, means.x_ddadd), (closed.x_d, closed.x_ddd, closed.x_ddadd));
        assert_eq!(means.bound, closed.bound);
        assert!(runs <= closed.bound);
    }
    let six = descent_expectations(6).unwrap();
    assert_eq!(six.x_d, Rational64::new(5, 2));
}

#[test]
fn runs_bounded_by_descent_counts() {
    for p in Permutation::all(7) {
        let s = descent_profile(&p);
        assert!(min_monotone_runs(&p) + s.x_ddd + s.x_ddadd <= 1 + s.x_d, "{p}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn lettericity_at_most_runs(p in perm_strategy(7, 7)) {
        let g = inversion_graph(&p);
        let l = lettericity_exact(&g, 5).unwrap().unwrap().lettering.k();
        prop_assert!(l <= min_monotone_runs(&p));
    }
}
