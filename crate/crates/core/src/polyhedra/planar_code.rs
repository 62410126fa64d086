//! plantri's `planar_code` and its `-a` ASCII form.
//!
//! Binary: the header `>>planar_code<<`, then per graph one byte `n` and for
//! each vertex its neighbors (1-based) in clockwise order, closed by a 0.
//! ASCII: one graph per line, `n` then comma-separated neighbor lists where
//! vertex `i` is the byte `b'a' + i`.

use super::{PlaneQuarticGraph, PolyhedraError};
use std::io::Read;

pub const HEADER: &[u8] = b">>planar_code<<";

/// Reads a binary `planar_code` stream.
pub fn read_planar_code(mut stream: impl Read) -> Result<Vec<PlaneQuarticGraph>, PolyhedraError> {
    let mut bytes = Vec::new();
    stream.read_to_end(&mut bytes)?;
    parse_planar_code(&bytes)
}

pub fn parse_planar_code(bytes: &[u8]) -> Result<Vec<PlaneQuarticGraph>, PolyhedraError> {
    let mut pos = bytes
        .strip_prefix(HEADER)
        .map(|_| HEADER.len())
        .ok_or(PolyhedraError::MissingHeader)?;
    let mut graphs = Vec::new();
    while pos < bytes.len() {
        let id = graphs.len();
        let n = bytes[pos] as usize;
        pos += 1;
        if n == 0 {
            return Err(PolyhedraError::Format { id, msg: "two-byte vertex counts are not supported".into() });
        }
        let mut adj = Vec::with_capacity(n);
        for v in 0..n {
            let mut list = Vec::with_capacity(4);
            loop {
                let &b = bytes.get(pos).ok_or(PolyhedraError::Truncated { id })?;
                pos += 1;
                if b == 0 {
                    break;
                }
                if b as usize > n {
                    return Err(PolyhedraError::Format { id, msg: format!("vertex {} lists neighbor {b}", v + 1) });
                }
                list.push(b as u32 - 1);
            }
            adj.push(list);
        }
        graphs.push(PlaneQuarticGraph::from_adjacency(id, &adj)?);
    }
    Ok(graphs)
}

/// Reads plantri `-a` output, one graph per non-empty line.
pub fn parse_planar_ascii(text: &str) -> Result<Vec<PlaneQuarticGraph>, PolyhedraError> {
    let mut graphs = Vec::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
        let id = graphs.len();
        let bad = |msg: &str| PolyhedraError::Format { id, msg: msg.to_string() };
        let (n, lists) = line.split_once(char::is_whitespace).ok_or_else(|| bad("expected `n lists`"))?;
        let n: usize = n.parse().map_err(|_| bad("bad vertex count"))?;
        let adj: Vec<Vec<u32>> = lists
            .trim()
            .split(',')
            .map(|l| l.bytes().map(|b| b.wrapping_sub(b'a') as u32).collect())
            .collect();
        if adj.len() != n {
            return Err(PolyhedraError::Truncated { id });
        }
        if adj.iter().flatten().any(|&w| w as usize >= n) {
            return Err(bad("neighbor out of range"));
        }
        graphs.push(PlaneQuarticGraph::from_adjacency(id, &adj)?);
    }
    Ok(graphs)
}

/// Accepts either format, by the presence of the binary header.
pub fn parse_graphs(bytes: &[u8]) -> Result<Vec<PlaneQuarticGraph>, PolyhedraError> {
    if bytes.starts_with(HEADER) {
        parse_planar_code(bytes)
    } else {
        let text = std::str::from_utf8(bytes).map_err(|_| PolyhedraError::MissingHeader)?;
        parse_planar_ascii(text)
    }
}

/// Encodes graphs as binary `planar_code`.
pub fn write_planar_code(graphs: &[PlaneQuarticGraph]) -> Vec<u8> {
    let mut out = HEADER.to_vec();
    for g in graphs {
        out.push(g.vertex_count() as u8);
        for v in 0..g.vertex_count() {
            out.extend(g.neighbors(v).iter().map(|&w| w as u8 + 1));
            out.push(0);
        }
    }
    out
}
