//! graph6 encoding (nauty/geng interchange format).
//!
//! The order is written as one byte `n + 63` for `n ≤ 62` and as `~`
//! followed by three 6-bit bytes otherwise. The upper triangle is then packed
//! column by column (`(0,1), (0,2), (1,2), (0,3), …`), six bits per byte,
//! most significant bit first, padded with zeros.

use crate::error::{Error, Result};
use crate::graph::{full_mask, Graph, MAX_ORDER};

pub const HEADER: &str = ">>graph6<<";

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedGraph6(msg.into())
}

fn sixbit(byte: u8) -> Result<u8> {
    if (63..=126).contains(&byte) {
        Ok(byte - 63)
    } else {
        Err(malformed(format!("byte {byte:#04x} outside 63..=126")))
    }
}

/// Decodes a single graph6 line. A leading `>>graph6<<` header is accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let (n, body) = match bytes.first() {
        None => return Err(malformed("empty string")),
        Some(b'~') => {
            if bytes.get(1) == Some(&b'~') {
                return Err(malformed("order exceeds 258047"));
            }
            if bytes.len() < 4 {
                return Err(malformed("truncated order field"));
            }
            let n = bytes[1..4]
                .iter()
                .try_fold(0usize, |acc, &b| Ok::<_, Error>((acc << 6) | sixbit(b)? as usize))?;
            if n < 63 {
                return Err(malformed("long order form used for n < 63"));
            }
            (n, &bytes[4..])
        }
        Some(&b) => (sixbit(b)? as usize, &bytes[1..]),
    };
    if n > MAX_ORDER {
        return Err(Error::TooLarge(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(malformed(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let mut adj = vec![0u64; n];
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let word = sixbit(body[k / 6])?;
            if word & (0x20 >> (k % 6)) != 0 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
            if k == nbits {
                break 'outer;
            }
        }
    }
    if nbits % 6 != 0 {
        let last = sixbit(body[expected - 1])?;
        if last & full_mask(6 - nbits % 6) as u8 != 0 {
            return Err(malformed("nonzero padding bits"));
        }
    }
    Graph::from_adjacency(adj)
}

/// Encodes a graph as graph6 without a header or trailing newline.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + n * n / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut word = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            word = (word << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(word + 63);
                word = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((word << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Decodes a newline-separated stream, skipping blank lines.
pub fn parse_graph6_stream(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(parse_graph6)
        .collect()
}
