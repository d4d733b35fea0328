mod common;

use common::{perm, perm_strategy};
use permgraph::graph::{is_isomorphic, SimpleGraph};
use permgraph::invgraph::inversion_graph;
use permgraph::perm::{
    contains_pattern, descent_profile, inversion_polynomial, is_log_concave, lehmer_decode, lehmer_encode, Symmetry,
};
use permgraph::Permutation;
use proptest::prelude::*;

#[test]
fn lehmer_round_trip_and_sums() {
    assert_eq!(lehmer_encode(&perm("37168254")).entries(), &[2, 5, 0, 3, 3, 0, 1, 0]);
    for n in 1..=7 {
        for (rank, p) in Permutation::all(n).enumerate() {
            let c = lehmer_encode(&p);
            assert_eq!(lehmer_decode(&c), p);
            assert_eq!(c.rank(), rank as u128);
            if n == 6 {
                assert_eq!(c.entries().iter().sum::<usize>(), p.inversions().len());
            }
        }
    }
}

#[test]
fn inversion_histogram() {
    for n in 1..=8 {
        let mut hist = vec![0u64; n * (n - 1) / 2 + 1];
        for p in Permutation::all(n) {
            hist[p.length()] += 1;
        }
        assert_eq!(inversion_polynomial(n).unwrap(), hist, "n = {n}");
    }
    for n in 3..=10 {
        assert!(is_log_concave(&inversion_polynomial(n).unwrap()));
    }
}

#[test]
fn forests_and_avoidance() {
    let (p321, p3412) = (perm("321"), perm("3412"));
    for p in Permutation::all(6) {
        let avoids = contains_pattern(&p, &p321).is_none() && contains_pattern(&p, &p3412).is_none();
        let equal = p.length() == p.absolute_length();
        assert_eq!(equal, avoids, "{p}");
        assert_eq!(equal, inversion_graph(&p).is_forest(), "{p}");
    }
}

#[test]
fn worked_statistics() {
    let s = descent_profile(&perm("675419823"));
    assert_eq!(s.descent_set, vec![2, 3, 4, 6, 7]);
    assert_eq!(s.segmentation, "67|5|4|19|8|23");
    assert_eq!(perm("3421").absolute_length(), 3);
    assert_eq!(perm("4231").absolute_length(), 1);
}

proptest! {
    #[test]
    fn symmetries_are_involutions(p in perm_strategy(1, 9)) {
        for s in [Symmetry::Reverse, Symmetry::Complement, Symmetry::ReverseComplement, Symmetry::Inverse] {
            prop_assert_eq!(p.symmetry(s).symmetry(s), p.clone());
        }
    }

    #[test]
    fn sums_are_unions_and_joins(a in perm_strategy(1, 4), b in perm_strategy(1, 4)) {
        let (ga, gb) = (inversion_graph(&a), inversion_graph(&b));
        prop_assert!(is_isomorphic(&inversion_graph(&a.direct_sum(&b)), &ga.disjoint_union(&gb)).unwrap());
        prop_assert!(is_isomorphic(&inversion_graph(&a.skew_sum(&b)), &ga.join(&gb)).unwrap());
    }

    #[test]
    fn text_round_trip(p in perm_strategy(1, 12)) {
        let back: Permutation = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p.clone());
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Permutation>(&json).unwrap(), p);
    }

    #[test]
    fn patterns_embed(p in perm_strategy(1, 8), mask in any::<u16>()) {
        let keep: Vec<usize> = (1..=p.len()).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        prop_assume!(!keep.is_empty());
        let vals: Vec<usize> = keep.iter().map(|&i| p.at(i)).collect();
        let pat = Permutation::standardize(&vals).unwrap();
        prop_assert!(contains_pattern(&p, &pat).is_some());
        let g = inversion_graph(&p);
        prop_assert_eq!(g.induced(&vals).edge_count(), inversion_graph(&pat).edge_count());
    }
}

#[test]
fn empty_graph_edge_cases() {
    assert!(Permutation::new(vec![]).is_err());
    assert_eq!(inversion_graph(&Permutation::identity(4)), SimpleGraph::empty(4));
}
