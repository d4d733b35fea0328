#![allow(dead_code)]

use permgraph::graph::{generate_all_graphs, SimpleGraph};
use permgraph::Permutation;
use proptest::prelude::*;

pub fn catalog(n_min: usize, n_max: usize) -> Vec<SimpleGraph> {
    (n_min..=n_max).flat_map(|n| generate_all_graphs(n).unwrap()).map(|f| f.to_graph()).collect()
}

pub fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

pub fn perm_strategy(n_min: usize, n_max: usize) -> impl Strategy<Value = Permutation> {
    (n_min..=n_max)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

pub fn graph_strategy(n_min: usize, n_max: usize) -> impl Strategy<Value = SimpleGraph> {
    (n_min..=n_max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut g = SimpleGraph::empty(n);
            let mut it = bits.into_iter();
            for u in 1..=n {
                for v in u + 1..=n {
                    if it.next().unwrap() {
                        g.add_edge(u, v);
                    }
                }
            }
            g
        })
    })
}
