//! The short form of graph6: one size byte, then the upper triangle packed
//! six bits per printable byte.

use super::SimpleGraph;
use crate::error::{Error, Result};

/// Largest `n` expressible in the single-byte size header.
pub const GRAPH6_CAP: usize = 62;

pub fn graph6_encode(g: &SimpleGraph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_CAP {
        return Err(Error::SizeCap { what: "graph6 short form", n, cap: GRAPH6_CAP });
    }
    let mut out = vec![(n + 63) as u8];
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i + 1, j + 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("printable ascii"))
}

pub fn graph6_decode(text: &str) -> Result<SimpleGraph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let (&head, body) = bytes.split_first().ok_or_else(|| Error::Parse("empty graph6 string".into()))?;
    if head == b'~' {
        return Err(Error::Parse("long-form graph6 headers are not supported".into()));
    }
    if !(63..=125).contains(&head) {
        return Err(Error::Parse(format!("invalid graph6 size byte {head}")));
    }
    let n = (head - 63) as usize;
    let m = n * n.saturating_sub(1) / 2;
    let need = m.div_ceil(6);
    if body.len() != need {
        return Err(Error::Parse(format!("graph6 body for n={n} needs {need} bytes, found {}", body.len())));
    }
    let mut bitvec = Vec::with_capacity(need * 6);
    for &b in body {
        if !(63..=126).contains(&b) {
            return Err(Error::Parse(format!("invalid graph6 byte {b}")));
        }
        let x = b - 63;
        bitvec.extend((0..6).rev().map(|k| x >> k & 1 == 1));
    }
    if bitvec[m..].iter().any(|&b| b) {
        return Err(Error::Parse("nonzero graph6 padding".into()));
    }
    let mut g = SimpleGraph::empty(n);
    let mut t = 0;
    for j in 1..n {
        for i in 0..j {
            if bitvec[t] {
                g.add_edge(i + 1, j + 1);
            }
            t += 1;
        }
    }
    Ok(g)
}
