//! Parsing command-line operands.
//!
//! Graphs are accepted in three spellings. A JSON object `{"n":…,"edges":…}`,
//! a family name such as `P6`, `C5`, `K4`, `K3,3`, `N2`, `M3` (matching),
//! `E4` (edgeless) or `spikes`, and otherwise graph6. Family names always
//! contain a digit and graph6 never does, so the two cannot be confused.

use permgraph::graph::{graph6_decode, SimpleGraph};
use permgraph::{Error, Permutation};

pub fn parse_perm(s: &str) -> Result<Permutation, Error> {
    let s = s.trim();
    if s.starts_with('[') {
        return serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()));
    }
    s.parse()
}

pub fn parse_graph(s: &str) -> Result<SimpleGraph, Error> {
    let s = s.trim();
    if s.starts_with('{') {
        return serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()));
    }
    if s == "spikes" {
        return Ok(SimpleGraph::square_with_spikes());
    }
    if s.chars().any(|c| c.is_ascii_digit()) {
        return family(s);
    }
    graph6_decode(s)
}

fn family(s: &str) -> Result<SimpleGraph, Error> {
    let bad = || Error::Parse(format!("unknown graph family {s:?}"));
    let (head, rest) = s.split_at(1);
    let nums: Vec<usize> = rest.split(',').map(|t| t.parse().map_err(|_| bad())).collect::<Result<_, _>>()?;
    let cap = |n: usize| {
        if n > 64 {
            Err(Error::SizeCap { what: "graph", n, cap: 64 })
        } else {
            Ok(n)
        }
    };
    match (head, nums.as_slice()) {
        ("P", &[n]) if n >= 1 => Ok(SimpleGraph::path(cap(n)?)),
        ("C", &[n]) if n >= 3 => Ok(SimpleGraph::cycle(cap(n)?)),
        ("K", &[n]) if n >= 1 => Ok(SimpleGraph::complete(cap(n)?)),
        ("K", &[a, b]) if a >= 1 && b >= 1 => Ok(SimpleGraph::complete_bipartite(a, cap(a + b)? - a)),
        ("N", &[k]) => Ok(SimpleGraph::nested_triangle(cap(k + 2)? - 2)),
        ("M", &[m]) if m >= 1 => Ok(SimpleGraph::matching(cap(2 * m)? / 2)),
        ("E", &[n]) if n >= 1 => Ok(SimpleGraph::empty(cap(n)?)),
        _ => Err(bad()),
    }
}

pub fn parse_json<T: serde::de::DeserializeOwned>(s: &str) -> Result<T, Error> {
    serde_json::from_str(s.trim()).map_err(|e| Error::Parse(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spellings() {
        assert_eq!(parse_graph("Bw").unwrap(), SimpleGraph::complete(3));
        assert_eq!(parse_graph("K3").unwrap(), SimpleGraph::complete(3));
        assert_eq!(parse_graph(r#"{"n":3,"edges":[[1,2],[1,3],[2,3]]}"#).unwrap(), SimpleGraph::complete(3));
        assert_eq!(parse_graph("K3,3").unwrap().edge_count(), 9);
        assert_eq!(parse_graph("N2").unwrap().n(), 4);
        assert!(parse_graph("Q7").is_err());
        assert!(parse_graph("B!").is_err());
        assert_eq!(parse_perm("[3,1,2]").unwrap(), parse_perm("312").unwrap());
    }
}
