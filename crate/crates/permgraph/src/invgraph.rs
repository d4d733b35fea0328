//! Inversion graphs and their realisations.
//!
//! The inversion graph of π has one vertex per entry, labelled by its value,
//! and an edge between two entries exactly when they form an inversion.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_cap, Error, Result};
use crate::graph::{canonical_form, SimpleGraph};
use crate::perm::Permutation;
use crate::prime::{first_transitive_orientation, permutation_from_orientations};

pub const RECOGNIZE_CAP: usize = 9;
pub const EQUIVALENTS_CAP: usize = 7;

/// `G_π`, vertices labelled by value.
pub fn inversion_graph(p: &Permutation) -> SimpleGraph {
    let v = p.values();
    let mut g = SimpleGraph::empty(p.len());
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                g.add_edge(v[i], v[j]);
            }
        }
    }
    g
}

/// Closed intervals known only through the order of their endpoints.
///
/// `left_order` lists interval labels by increasing left endpoint and
/// `right_order` by increasing right endpoint. Containment depends on nothing
/// else, so this is all a containment realisation needs.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "IntervalJson", into = "IntervalJson")]
pub struct IntervalSystem {
    left_order: Vec<usize>,
    right_order: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct IntervalJson {
    left_order: Vec<usize>,
    right_order: Vec<usize>,
}

impl IntervalSystem {
    pub fn new(left_order: Vec<usize>, right_order: Vec<usize>) -> Result<Self> {
        if left_order.len() != right_order.len() {
            return Err(Error::Precondition("endpoint orders differ in length".into()));
        }
        for order in [&left_order, &right_order] {
            Permutation::new(order.clone())
                .map_err(|_| Error::Precondition("endpoint ranks must be distinct labels 1..=n".into()))?;
        }
        Ok(IntervalSystem { left_order, right_order })
    }

    /// Interval `i + 1` is `intervals[i]`. Endpoints must be pairwise distinct and
    /// each left endpoint below its right endpoint.
    pub fn from_intervals(intervals: &[(f64, f64)]) -> Result<Self> {
        let mut ends: Vec<f64> = intervals.iter().flat_map(|&(l, r)| [l, r]).collect();
        if intervals.iter().any(|&(l, r)| l.partial_cmp(&r) != Some(std::cmp::Ordering::Less)) {
            return Err(Error::Precondition("each interval needs l < r".into()));
        }
        ends.sort_by(|a, b| a.partial_cmp(b).expect("finite endpoints"));
        if ends.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Precondition("duplicate endpoint".into()));
        }
        let order_by = |key: fn(&(f64, f64)) -> f64| {
            let mut labels: Vec<usize> = (1..=intervals.len()).collect();
            labels.sort_by(|&a, &b| key(&intervals[a - 1]).partial_cmp(&key(&intervals[b - 1])).unwrap());
            labels
        };
        IntervalSystem::new(order_by(|iv| iv.0), order_by(|iv| iv.1))
    }

    pub fn len(&self) -> usize {
        self.left_order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.left_order.is_empty()
    }

    pub fn left_order(&self) -> &[usize] {
        &self.left_order
    }

    pub fn right_order(&self) -> &[usize] {
        &self.right_order
    }

    /// Edge `ab` when one of the two intervals contains the other.
    pub fn containment_graph(&self) -> SimpleGraph {
        let n = self.len();
        let rank = |order: &[usize]| {
            let mut r = vec![0; n + 1];
            for (i, &label) in order.iter().enumerate() {
                r[label] = i;
            }
            r
        };
        let (lr, rr) = (rank(&self.left_order), rank(&self.right_order));
        let mut g = SimpleGraph::empty(n);
        for a in 1..=n {
            for b in a + 1..=n {
                let a_in_b = lr[b] < lr[a] && rr[a] < rr[b];
                let b_in_a = lr[a] < lr[b] && rr[b] < rr[a];
                if a_in_b || b_in_a {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }
}

impl fmt::Display for IntervalSystem {
    /// Endpoints on a line, assuming every left endpoint comes first:
    /// `l1 l2 ... | r.. r..`. The same listing, read as points on two parallel
    /// lines or on the two halves of a circle, gives the other realisations.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l: Vec<String> = self.left_order.iter().map(|x| format!("l{x}")).collect();
        let r: Vec<String> = self.right_order.iter().map(|x| format!("r{x}")).collect();
        write!(f, "{} | {}", l.join(" "), r.join(" "))
    }
}

impl TryFrom<IntervalJson> for IntervalSystem {
    type Error = Error;
    fn try_from(j: IntervalJson) -> Result<Self> {
        IntervalSystem::new(j.left_order, j.right_order)
    }
}

impl From<IntervalSystem> for IntervalJson {
    fn from(s: IntervalSystem) -> IntervalJson {
        IntervalJson { left_order: s.left_order, right_order: s.right_order }
    }
}

/// `l_1 < ... < l_n < r_{π(1)} < ... < r_{π(n)}`.
pub fn to_interval_system(p: &Permutation) -> IntervalSystem {
    IntervalSystem { left_order: (1..=p.len()).collect(), right_order: p.values().to_vec() }
}

/// Relabel intervals by left endpoint, then read labels in right-endpoint order.
pub fn from_interval_system(s: &IntervalSystem) -> Permutation {
    let mut relabel = vec![0; s.len() + 1];
    for (i, &label) in s.left_order.iter().enumerate() {
        relabel[label] = i + 1;
    }
    Permutation::from_vec_unchecked(s.right_order.iter().map(|&x| relabel[x]).collect())
}

/// If `g` is an inversion graph, a permutation π and a map `v -> map[v - 1]`
/// that is an isomorphism from `g` onto `G_π`.
///
/// Both `g` and its complement must admit transitive orientations; the two
/// orientations then combine into the index order and the value order.
pub fn recognize(g: &SimpleGraph) -> Result<Option<(Permutation, Vec<usize>)>> {
    check_cap("recognition", g.n(), RECOGNIZE_CAP)?;
    if g.n() == 0 {
        return Ok(None);
    }
    let Some(f) = first_transitive_orientation(g) else {
        return Ok(None);
    };
    let Some(h) = first_transitive_orientation(&g.complement()) else {
        return Ok(None);
    };
    let Some((p, map)) = permutation_from_orientations(g.n(), &f, &h) else {
        return Ok(None);
    };
    if g.relabel(&map) != inversion_graph(&p) {
        return Ok(None);
    }
    Ok(Some((p, map)))
}

/// Every σ of the same length whose inversion graph is isomorphic to `G_π`, sorted.
pub fn equivalent_permutations(p: &Permutation) -> Result<Vec<Permutation>> {
    check_cap("equivalent permutations", p.len(), EQUIVALENTS_CAP)?;
    let target = canonical_form(&inversion_graph(p))?;
    let g = inversion_graph(p);
    let mut out = Vec::new();
    for s in Permutation::all(p.len()) {
        let h = inversion_graph(&s);
        if h.edge_count() == g.edge_count() && canonical_form(&h)? == target {
            out.push(s);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        let g = inversion_graph(&p("31542"));
        assert_eq!(g.edges(), vec![(1, 3), (2, 3), (2, 4), (2, 5), (4, 5)]);
        assert_eq!(inversion_graph(&p("2413")).edges(), vec![(1, 2), (1, 4), (3, 4)]);
        assert_eq!(inversion_graph(&Permutation::identity(4)).edge_count(), 0);
    }

    #[test]
    fn intervals() {
        let s = IntervalSystem::from_intervals(&[(3., 8.), (1., 4.), (5., 6.), (2., 10.), (7., 9.)]).unwrap();
        assert_eq!(from_interval_system(&s), p("14352"));
        let q = p("31542");
        let sys = to_interval_system(&q);
        assert_eq!(sys.containment_graph(), inversion_graph(&q));
        assert_eq!(from_interval_system(&sys), q);
        let one = IntervalSystem::from_intervals(&[(0., 1.)]).unwrap();
        assert_eq!(from_interval_system(&one), p("1"));
        assert!(IntervalSystem::from_intervals(&[(0., 1.), (1., 2.)]).is_err());
        assert!(IntervalSystem::new(vec![1, 1], vec![1, 2]).is_err());
        assert_eq!(sys.to_string(), "l1 l2 l3 l4 l5 | r3 r1 r5 r4 r2");
    }

    #[test]
    fn recognition() {
        assert_eq!(recognize(&SimpleGraph::cycle(5)).unwrap(), None);
        let (q, map) = recognize(&SimpleGraph::path(4)).unwrap().unwrap();
        assert_eq!(SimpleGraph::path(4).relabel(&map), inversion_graph(&q));
        assert!(is_isomorphic(&inversion_graph(&q), &SimpleGraph::path(4)).unwrap());
        let (e, _) = recognize(&SimpleGraph::empty(4)).unwrap().unwrap();
        assert_eq!(e, Permutation::identity(4));
    }

    #[test]
    fn equivalents() {
        assert_eq!(equivalent_permutations(&p("3142")).unwrap(), vec![p("2413"), p("3142")]);
        assert_eq!(equivalent_permutations(&p("1234")).unwrap(), vec![p("1234")]);
    }
}
