//! The graph6 text format.
//!
//! Size header `N(n)`: one byte `n + 63` for `n <= 62`, otherwise `~` followed
//! by three 6-bit bytes (big-endian) for `n <= 258047`. The body packs the
//! upper triangle column by column, `x(0,1) x(0,2) x(1,2) x(0,3) ...`, six bits
//! per byte with the high bit first, zero-padded, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_VERTICES: usize = 258_047;

fn err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(err("empty input"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(err(format!("byte 0x{b:02x} outside the printable range 63..=126")));
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        return Err(err(format!("8-byte size header unsupported (n > {MAX_VERTICES})")));
    } else if bytes.len() < 4 {
        return Err(err("truncated size header"));
    } else {
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if n < 63 {
            return Err(err(format!("non-canonical long size header for n = {n}")));
        }
        (n, &bytes[4..])
    };

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(err(format!(
            "expected {expected} body bytes for n = {n}, found {}",
            body.len()
        )));
    }

    let mut edges = Vec::new();
    let mut k = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = body[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = body[body.len() - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(err("non-zero padding bits"));
        }
    }
    Graph::from_edges(n, edges)
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_VERTICES, "graph6 emission supports at most {MAX_VERTICES} vertices");
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|b| b as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
