//! graph6 and edge-list serialization.

use super::Graph;
use crate::{Error, Result};

const HEADER: &[u8] = b">>graph6<<";

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Encodes `g` in graph6 (no header, no trailing newline).
///
/// Bits of the upper triangle are taken column by column:
/// `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed six per byte, offset by 63.
pub fn encode_graph6(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let mut out = Vec::with_capacity(8 + n * n.saturating_sub(1) / 12 + 1);
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    out
}

fn sixbits(b: u8) -> Result<u8> {
    if (63..=126).contains(&b) {
        Ok(b - 63)
    } else {
        Err(Error::Graph6(format!("byte {b:#04x} outside the printable range 63..=126")))
    }
}

/// Decodes one graph6 string. An optional `>>graph6<<` header and trailing
/// newline are accepted.
pub fn decode_graph6(bytes: &[u8]) -> Result<Graph> {
    let mut data = bytes.strip_prefix(HEADER).unwrap_or(bytes);
    while let Some(rest) = data.strip_suffix(b"\n").or_else(|| data.strip_suffix(b"\r")) {
        data = rest;
    }
    let (n, body) = match data {
        [] => return Err(Error::Graph6("empty input".into())),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::Graph6("truncated 8-byte size header".into()));
            }
            let mut n = 0usize;
            for &b in &rest[..6] {
                n = (n << 6) | sixbits(b)? as usize;
            }
            if n <= 258_047 {
                return Err(Error::Graph6(format!("non-canonical size header for n = {n}")));
            }
            (n, &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated 4-byte size header".into()));
            }
            let mut n = 0usize;
            for &b in &rest[..3] {
                n = (n << 6) | sixbits(b)? as usize;
            }
            if n <= 62 {
                return Err(Error::Graph6(format!("non-canonical size header for n = {n}")));
            }
            (n, &rest[3..])
        }
        [b, rest @ ..] => (sixbits(*b)? as usize, rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let mut g = Graph::new(n);
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = sixbits(body[k / 6])?;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = sixbits(body[expected - 1])?;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    for &b in body {
        sixbits(b)?;
    }
    Ok(g)
}

/// Edge list, one `u v` line per edge, sorted lexicographically.
pub fn write_edge_list(g: &Graph) -> String {
    let mut s = String::new();
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// Parses an edge list; the vertex count is one more than the largest vertex.
/// Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut n = 0;
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |reason: &str| Error::EdgeList {
            line: idx + 1,
            reason: reason.to_string(),
        };
        let mut parts = line.split_whitespace();
        let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(err("expected two vertex indices"));
        };
        let u: usize = a.parse().map_err(|_| err("vertex is not a non-negative integer"))?;
        let v: usize = b.parse().map_err(|_| err("vertex is not a non-negative integer"))?;
        if u == v {
            return Err(err("self-loop"));
        }
        n = n.max(u + 1).max(v + 1);
        edges.push((u, v));
    }
    Graph::from_edges(n, edges)
}
