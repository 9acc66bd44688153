//! graph6 encoding (short and 4-byte length headers, n ≤ 258047).
//!
//! The upper triangle is packed column by column: bit order is
//! `x(0,1), x(0,2), x(1,2), x(0,3), …`, six bits per printable byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::{LabeledGraph, MAX_VERTICES};

pub fn parse_graph6(line: &str) -> Result<LabeledGraph> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    let err = |offset: usize, reason: &str| Error::Graph6 {
        offset,
        reason: reason.to_string(),
    };
    let mut pos = 0;
    if bytes.starts_with(b">>graph6<<") {
        pos = 10;
    }
    for (i, &b) in bytes.iter().enumerate().skip(pos) {
        if !(63..=126).contains(&b) {
            return Err(err(i, "byte outside the printable range 63..=126"));
        }
    }
    let first = *bytes.get(pos).ok_or_else(|| err(pos, "missing length header"))?;
    let n = if first < 126 {
        pos += 1;
        usize::from(first - 63)
    } else {
        if bytes.len() < pos + 4 {
            return Err(err(bytes.len(), "truncated long length header"));
        }
        if bytes[pos + 1] == 126 {
            return Err(err(pos + 1, "8-byte length headers are not supported"));
        }
        let n = bytes[pos + 1..pos + 4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63));
        pos += 4;
        n
    };
    if n > MAX_VERTICES {
        return Err(err(0, "more than 64 vertices"));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    let body = &bytes[pos..];
    if body.len() < needed {
        return Err(err(bytes.len(), "truncated bit vector"));
    }
    if body.len() > needed {
        return Err(err(pos + needed, "trailing bytes after bit vector"));
    }
    let mut g = LabeledGraph::empty(n);
    let mut k = 0usize;
    for b in 1..n {
        for a in 0..b {
            let byte = body[k / 6] - 63;
            if byte & (0x20 >> (k % 6)) != 0 {
                g.add_edge(a, b);
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn emit_graph6(g: &LabeledGraph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut used = 0;
    for b in 1..n {
        for a in 0..b {
            acc = (acc << 1) | u8::from(g.has_edge(a, b));
            used += 1;
            if used == 6 {
                out.push(acc + 63);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}
