use permgraph::invgraph::inversion_graph;
use permgraph::perm::is_simple;
use permgraph::pins::{find_reaching_proper_pin_sequence, is_proper, pins_to_chain};
use permgraph::prime::{edge_classes, is_chain};
use permgraph::Permutation;

#[test]
fn proper_sequences_over_simple_s5() {
    for p in Permutation::all(5).filter(is_simple) {
        let g = inversion_graph(&p);
        let classes = edge_classes(&g);
        let pts: Vec<(usize, usize)> = p.points().collect();
        for &x in &pts {
            for &y in &pts {
                for &z in &pts {
                    let Ok(s) = find_reaching_proper_pin_sequence(&p, x, y, z) else {
                        continue;
                    };
                    assert!(is_proper(&s));
                    let c = pins_to_chain(&s).unwrap();
                    assert!(is_chain(&g, &c));
                    let h = g.induced(&c);
                    let (p1, p2) = (c[0], c[1]);
                    if !h.is_connected() {
                        assert!(!g.has_edge(p1, p2));
                        let isolated = |v: usize| c.iter().all(|&w| !g.has_edge(v, w));
                        assert!(isolated(p1) || isolated(p2), "{p}: {c:?}");
                    }
                    if g.has_edge(p1, p2) {
                        let m = c.len();
                        let s_idx = (1..m).filter(|&i| g.has_edge(c[i - 1], c[i])).max().unwrap();
                        assert!(classes.same_class((p1, p2), (c[s_idx - 1], c[m - 1])), "{p}: {c:?}");
                    }
                }
            }
        }
    }
}
