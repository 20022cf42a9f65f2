//! Short-form graph6: one length byte `n + 63`, then the upper triangle of
//! the adjacency matrix in column order `(0,1),(0,2),(1,2),(0,3),..`, packed
//! six bits per byte (most significant first) with a bias of 63.

use super::{Graph, VertexSet};
use crate::error::Graph6Error;

pub const MAX_GRAPH6_N: usize = 62;

const BIAS: u8 = 63;
const HEADER: &str = ">>graph6<<";

/// Parses one graph6 line. A trailing newline and the optional `>>graph6<<`
/// header are accepted; anything else after the edge bytes is an error.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let (skip, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };

    let &first = body.first().ok_or(Graph6Error::Empty)?;
    if !(BIAS..=126).contains(&first) {
        return Err(Graph6Error::InvalidByte { offset: skip, byte: first });
    }
    if first == 126 {
        return Err(Graph6Error::LongForm { offset: skip });
    }
    let n = usize::from(first - BIAS);
    let bits = n * n.saturating_sub(1) / 2;
    let expected = 1 + bits.div_ceil(6);

    for (i, &b) in body.iter().enumerate().take(expected).skip(1) {
        if !(BIAS..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte { offset: skip + i, byte: b });
        }
    }
    if body.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: body.len() });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingGarbage { offset: skip + expected });
    }
    if bits % 6 != 0 {
        let pad = 6 - bits % 6;
        let last = body[expected - 1] - BIAS;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding { offset: skip + expected - 1 });
        }
    }

    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[1 + k / 6] - BIAS;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                adj[u].insert(v);
                adj[v].insert(u);
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

/// Encodes `g` as a short-form graph6 string (no newline).
pub fn emit_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > MAX_GRAPH6_N {
        return Err(Graph6Error::Unsupported { n });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + bits.div_ceil(6));
    out.push(n as u8 + BIAS);
    let mut acc = 0u8;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            k += 1;
            if k % 6 == 0 {
                out.push(acc + BIAS);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
