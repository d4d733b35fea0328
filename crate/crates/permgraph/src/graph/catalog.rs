use std::collections::BTreeSet;

use super::{canonical_form, CanonicalForm, SimpleGraph};
use crate::error::{check_cap, Error, Result};

pub const CATALOG_CAP: usize = 7;

/// One canonical form per isomorphism class of graphs on `n` vertices, sorted.
///
/// Built vertex by vertex: every graph on `n` vertices is some class on
/// `n - 1` vertices plus a new vertex with an arbitrary neighbourhood.
pub fn generate_all_graphs(n: usize) -> Result<Vec<CanonicalForm>> {
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    check_cap("graph catalog", n, CATALOG_CAP)?;
    let mut level = vec![canonical_form(&SimpleGraph::empty(1))?];
    for m in 2..=n {
        let mut next = BTreeSet::new();
        for form in &level {
            let base = form.to_graph();
            for nbhd in 0u64..1 << (m - 1) {
                let mut rows: Vec<u64> = (1..m).map(|v| base.neighbor_mask(v)).collect();
                for (i, row) in rows.iter_mut().enumerate() {
                    if nbhd >> i & 1 == 1 {
                        *row |= 1 << (m - 1);
                    }
                }
                rows.push(nbhd);
                next.insert(canonical_form(&SimpleGraph::from_rows(m, rows))?);
            }
        }
        level = next.into_iter().collect();
    }
    Ok(level)
}
