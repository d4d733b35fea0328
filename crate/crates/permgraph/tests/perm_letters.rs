mod common;

use common::{catalog, graph_strategy, perm, perm_strategy};
use permgraph::graph::{bits, is_isomorphic, SimpleGraph};
use permgraph::invgraph::recognize;
use permgraph::permletters::{
    counting_bound, cycle_encoding, decode_perm, ell_perm_exact, universal_encoding, PermLettering,
};
use proptest::prelude::*;

fn ell_perm(g: &SimpleGraph) -> usize {
    ell_perm_exact(g).unwrap().lettering.k()
}

#[test]
fn three_letter_example() {
    let l = PermLettering::new(3, vec![1, 1, 2, 3, 3, 2], perm("253614"), [(1, 2), (2, 3)], [(1, 3), (2, 3)]).unwrap();
    assert_eq!(decode_perm(&l).edges(), vec![(1, 4), (2, 3), (2, 4), (2, 6), (3, 4), (3, 5)]);
    let json = serde_json::to_string(&l).unwrap();
    assert_eq!(json, r#"{"k":3,"word":[1,1,2,3,3,2],"host":[2,5,3,6,1,4],"I":[[1,2],[2,3]],"N":[[1,3],[2,3]]}"#);
    assert_eq!(serde_json::from_str::<PermLettering>(&json).unwrap(), l);
}

#[test]
fn small_graphs() {
    assert_eq!(ell_perm(&SimpleGraph::cycle(5)), 2);
    for g in catalog(1, 5) {
        let e = ell_perm_exact(&g).unwrap();
        assert!(e.encodes(&g));
        let k = e.lettering.k();
        assert!(k <= g.n().div_ceil(2));
        assert_eq!(k == 1, recognize(&g).unwrap().is_some(), "{:?}", g.edges());
        let u = universal_encoding(&g).unwrap();
        assert_eq!(decode_perm(&u), g);
    }
}

#[test]
fn cycles_take_two() {
    for n in 5..=16 {
        let l = cycle_encoding(n).unwrap();
        assert_eq!(l.k(), 2);
        let g = decode_perm(&l);
        // Connected and 2-regular.
        assert!(g.is_connected() && (1..=n).all(|v| g.degree(v) == 2));
        if n <= 9 {
            assert!(is_isomorphic(&g, &SimpleGraph::cycle(n)).unwrap());
        }
    }
}

#[test]
fn counting_arithmetic() {
    // With α = 1/4 the count of letterings falls behind 2^C(n,2) by n = 200.
    let r = counting_bound(200, 0.25).unwrap();
    assert_eq!(r.k, 50);
    assert_eq!(r.graphs_log2, 19900);
    assert!(r.exceeds);
    assert!(r.letterings_log2 <= r.relaxed_log2 + 1e-9);
}

fn lettering_strategy() -> impl Strategy<Value = PermLettering> {
    (perm_strategy(1, 7), 1usize..=3).prop_flat_map(|(host, k)| {
        let n = host.len();
        (
            proptest::collection::vec(1..=k, n),
            proptest::collection::vec(any::<bool>(), k * k),
            proptest::collection::vec(any::<bool>(), k * k),
        )
            .prop_map(move |(word, inv, non)| {
                let pick =
                    |m: &[bool]| (0..k * k).filter(|&i| m[i]).map(|i| (i / k + 1, i % k + 1)).collect::<Vec<_>>();
                PermLettering::new(k, word, host.clone(), pick(&inv), pick(&non)).unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn complements_decode_to_complements(l in lettering_strategy()) {
        prop_assert_eq!(decode_perm(&l.complemented()), decode_perm(&l).complement());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn monotone_under_induced_subgraphs(g in graph_strategy(1, 5), keep in any::<u64>()) {
        let keep = keep & g.all_mask();
        prop_assume!(keep != 0);
        let h = g.induced(&bits(keep).collect::<Vec<_>>());
        prop_assert!(ell_perm(&h) <= ell_perm(&g));
    }
}
