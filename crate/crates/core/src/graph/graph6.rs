//! Short-form graph6 (at most 62 vertices).
//!
//! Layout: one byte `n + 63`, then the upper triangle of the adjacency
//! matrix read column by column (`(0,1), (0,2), (1,2), (0,3), ...`), packed
//! big-endian into 6-bit groups, each offset by 63. The last group is
//! zero-padded.

use super::{Graph, GraphError};

const HEADER: &str = ">>graph6<<";
const MAX_SHORT: usize = 62;

fn bit_count(n: usize) -> usize {
    n * (n - 1) / 2
}

pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let s = text.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    let err = |m: String| GraphError::Graph6(m);
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(format!("invalid character 0x{b:02x} at position {pos}")));
        }
    }
    let (&first, body) = bytes
        .split_first()
        .ok_or_else(|| err("empty string".into()))?;
    if first == 126 {
        return Err(err("only the short form (n <= 62) is supported".into()));
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(err("graph has no vertices".into()));
    }
    let bits = bit_count(n);
    let expected = bits.div_ceil(6);
    if body.len() < expected {
        return Err(err(format!(
            "truncated: expected {expected} data bytes, found {}",
            body.len()
        )));
    }
    if body.len() > expected {
        return Err(err(format!(
            "trailing data: expected {expected} data bytes, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> Result<String, GraphError> {
    let n = g.vertex_count();
    if n > MAX_SHORT {
        return Err(GraphError::Graph6(format!(
            "{n} vertices exceed the short-form limit of {MAX_SHORT}"
        )));
    }
    let mut out = vec![(n + 63) as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.adjacent(i, j) as u8;
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
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

impl Graph {
    pub fn to_graph6(&self) -> Result<String, GraphError> {
        to_graph6(self)
    }
}
