//! graph6 encoding and decoding for simple graphs of order at most 62.
//!
//! Single-byte order header (63 + n), then the upper triangle in column
//! order packed into 6-bit groups, each offset by 63. Padding bits must
//! be zero, so every graph has exactly one valid encoding.

use crate::error::{Error, Result};
use crate::graph::MultiGraph;

pub const MAX_GRAPH6_ORDER: usize = 62;

pub fn to_graph6(g: &MultiGraph) -> Result<String> {
    if !g.is_simple() {
        return Err(Error::NotSimple { op: "graph6" });
    }
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::TooLarge {
            what: "graph6",
            order: n,
            limit: MAX_GRAPH6_ORDER,
        });
    }
    let mut out = vec![63 + n as u8];
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | (g.multiplicity(i, j) as u8 & 1);
            filled += 1;
            if filled == 6 {
                out.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (group << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("ascii"))
}

pub fn parse_graph6(s: &str) -> Result<MultiGraph> {
    // Leading format tag used by some census files.
    let (s, base) = match s.strip_prefix(">>graph6<<") {
        Some(rest) => (rest, ">>graph6<<".len()),
        None => (s, 0),
    };
    let bytes = s.as_bytes();
    let err = |offset: usize, reason: &str| Error::Graph6 {
        offset: base + offset,
        reason: reason.to_string(),
    };
    if bytes.is_empty() {
        return Err(err(0, "empty input"));
    }
    let head = bytes[0];
    if head == 126 {
        return Err(err(0, "orders above 62 are not supported"));
    }
    if !(63..=125).contains(&head) {
        return Err(err(0, "invalid order byte"));
    }
    let n = (head - 63) as usize;
    if n == 0 {
        return Err(err(0, "order 0 graph"));
    }
    let bit_len = n * (n - 1) / 2;
    let expected = bit_len.div_ceil(6);
    if bytes.len() - 1 < expected {
        return Err(err(bytes.len(), "truncated bit payload"));
    }
    if bytes.len() - 1 > expected {
        return Err(err(1 + expected, "trailing bytes after bit payload"));
    }
    let mut g = MultiGraph::new(n)?;
    let mut t = 0;
    for (idx, &b) in bytes[1..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(1 + idx, "byte outside graph6 alphabet"));
        }
        let group = b - 63;
        for k in 0..6 {
            let bit = group >> (5 - k) & 1;
            if t >= bit_len {
                if bit != 0 {
                    return Err(err(1 + idx, "nonzero padding bit"));
                }
                continue;
            }
            if bit == 1 {
                let (i, j) = triangle_coords(t);
                g = g.add_edge(i, j)?;
            }
            t += 1;
        }
    }
    Ok(g)
}

/// Inverse of the column-order bit layout: bit `t` sits in column `j`,
/// row `i`, where `t = j(j-1)/2 + i`.
fn triangle_coords(t: usize) -> (usize, usize) {
    let mut j = 1;
    while (j + 1) * j / 2 <= t {
        j += 1;
    }
    (t - j * (j - 1) / 2, j)
}
