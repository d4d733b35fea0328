mod common;

use common::{catalog, graph_strategy};
use permgraph::graph::{bits, SimpleGraph};
use permgraph::letters::{decode, encode_chain, extend_lettering, lettericity_exact, palindromic_savings, Lettering};
use permgraph::prime::{find_chain, is_prime};
use proptest::prelude::*;

fn ell(g: &SimpleGraph) -> usize {
    lettericity_exact(g, 5).unwrap().unwrap().lettering.k()
}

#[test]
fn values() {
    assert_eq!(ell(&SimpleGraph::matching(2)), 2);
    assert_eq!(ell(&SimpleGraph::matching(3)), 3);
    for n in 3..=7 {
        assert_eq!(ell(&SimpleGraph::path(n)), (n + 4) / 3);
    }
    for n in 1..=7 {
        assert_eq!(ell(&SimpleGraph::complete(n)), 1);
    }
    let threshold = decode(&Lettering::new(2, vec![1, 2, 1, 1, 2, 2], [(1, 2), (2, 2)]).unwrap());
    assert_eq!(ell(&threshold), 2);
}

#[test]
fn letter_classes_are_homogeneous() {
    for g in catalog(1, 6) {
        let e = lettericity_exact(&g, 5).unwrap().unwrap();
        for a in 1..=e.lettering.k() {
            let class: u64 = e.order.iter().filter(|&&v| e.letter_of(v) == Some(a)).map(|&v| 1u64 << (v - 1)).sum();
            assert!(g.is_clique(class) || g.is_independent(class));
        }
    }
}

#[test]
fn palindromes_save_two_letters_at_seven() {
    for g in catalog(7, 7) {
        let (h, enc) = palindromic_savings(&g).unwrap();
        assert!(enc.lettering.k() >= 2, "{:?}", g.edges());
        assert_eq!(h.len(), 2 * enc.lettering.k());
        assert!(enc.encodes(&g));
        let full = extend_lettering(&g, &h, &enc).unwrap();
        assert_eq!(full.order.len(), 7);
        assert!(full.encodes(&g));
    }
}

#[test]
fn chains_encode_exactly() {
    for g in catalog(4, 6).into_iter().filter(is_prime) {
        let n = g.n();
        for u in 1..=n {
            for v in 1..=n {
                for w in 1..=n {
                    let Some(c) = find_chain(&g, u, v, w) else {
                        continue;
                    };
                    for len in (2..=c.len().min(6)).step_by(2) {
                        let enc = encode_chain(&g, &c[..len]).unwrap();
                        assert!(enc.encodes(&g));
                        assert_eq!(enc.lettering.k(), len / 2);
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn lettericity_is_monotone(g in graph_strategy(1, 6), keep in any::<u64>()) {
        let keep = keep & g.all_mask();
        prop_assume!(keep != 0);
        let h = g.induced(&bits(keep).collect::<Vec<_>>());
        prop_assert!(ell(&h) <= ell(&g));
    }
}
