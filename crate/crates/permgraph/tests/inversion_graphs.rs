mod common;

use common::{perm, perm_strategy};
use permgraph::graph::{automorphism_count, is_isomorphic, SimpleGraph};
use permgraph::invgraph::{
    equivalent_permutations, from_interval_system, inversion_graph, recognize, to_interval_system,
};
use permgraph::perm::is_simple;
use permgraph::Permutation;
use proptest::prelude::*;

fn symmetry_images(p: &Permutation) -> Vec<Permutation> {
    let rc = p.reverse_complement();
    let mut v = vec![p.clone(), p.inverse(), rc.inverse(), rc];
    v.sort();
    v.dedup();
    v
}

#[test]
fn inverse_graphs_agree_and_recognition_succeeds() {
    for p in Permutation::all(6) {
        let g = inversion_graph(&p);
        assert!(is_isomorphic(&g, &inversion_graph(&p.inverse())).unwrap());
        let (q, map) = recognize(&g).unwrap().expect("inversion graphs are recognised");
        assert_eq!(inversion_graph(&q).relabel(&map), g);
    }
}

#[test]
fn simple_permutations_have_few_equivalents() {
    for p in Permutation::all(6).filter(is_simple) {
        let eq = equivalent_permutations(&p).unwrap();
        assert_eq!(eq, symmetry_images(&p), "{p}");
        assert!([1, 2, 4].contains(&eq.len()));
        let aut = automorphism_count(&inversion_graph(&p)).unwrap();
        assert!([1, 2, 4].contains(&aut));
    }
}

#[test]
fn non_inversion_graphs() {
    for n in 5..=7 {
        assert!(recognize(&SimpleGraph::cycle(n)).unwrap().is_none());
    }
    assert!(recognize(&SimpleGraph::path(7)).unwrap().is_some());
    assert_eq!(equivalent_permutations(&perm("3142")).unwrap(), vec![perm("2413"), perm("3142")]);
}

proptest! {
    #[test]
    fn interval_systems_round_trip(p in perm_strategy(1, 9)) {
        let s = to_interval_system(&p);
        prop_assert_eq!(from_interval_system(&s), p.clone());
        prop_assert_eq!(s.containment_graph(), inversion_graph(&p));
    }
}
