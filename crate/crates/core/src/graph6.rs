//! graph6 encoding, short form only (fewer than 63 vertices).
//!
//! A line is one header byte `n + 63` followed by the upper triangle of the
//! adjacency matrix in column order `(0,1), (0,2), (1,2), (0,3), ...`, packed
//! six bits per byte with the most significant bit first, each byte offset
//! by 63, and the last byte zero-padded.

use crate::error::GraphError;
use crate::graph::Graph;

/// Largest order the short form can express.
pub const MAX_SHORT_ORDER: usize = 62;

const OFFSET: u8 = 63;

fn malformed(msg: impl Into<String>) -> GraphError {
    GraphError::MalformedGraph6(msg.into())
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 line. A leading `>>graph6<<` marker and trailing
/// line terminators are accepted.
pub fn decode_graph6(line: &str) -> Result<Graph, GraphError> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    let (&head, body) = bytes.split_first().ok_or_else(|| malformed("empty line"))?;
    if !(OFFSET..=126).contains(&head) {
        return Err(malformed(format!("bad header byte {head:#04x}")));
    }
    if head == 126 {
        return Err(malformed("long-form header (n >= 63) is not supported"));
    }
    let n = usize::from(head - OFFSET);
    if body.len() != body_len(n) {
        return Err(malformed(format!(
            "expected {} data bytes for n={n}, found {}",
            body_len(n),
            body.len()
        )));
    }
    if let Some(&b) = body.iter().find(|b| !(OFFSET..=126).contains(*b)) {
        return Err(malformed(format!("byte {b:#04x} outside 63..=126")));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - OFFSET;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encodes a graph as a graph6 line without the trailing newline.
pub fn encode_graph6(g: &Graph) -> Result<String, GraphError> {
    let n = g.order();
    if n > MAX_SHORT_ORDER {
        return Err(malformed(format!("order {n} needs the long form")));
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + OFFSET);
    let mut acc = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            used += 1;
            if used == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + OFFSET);
    }
    Ok(String::from_utf8(out).expect("graph6 is ASCII"))
}
