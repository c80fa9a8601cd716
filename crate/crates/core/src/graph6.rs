//! The graph6 interchange format: an order header followed by the upper
//! triangle of the adjacency matrix, column by column, packed six bits per
//! printable byte (value + 63).

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    InvalidByte { byte: u8, offset: usize },
    #[error("malformed order header")]
    BadHeader,
    #[error("expected {expected} body bytes, found {found}")]
    BadLength { expected: usize, found: usize },
    #[error("padding bits in the final byte are not zero")]
    NonZeroPadding,
}

const HEADER: &str = ">>graph6<<";
const OFFSET: u8 = 63;

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    // every byte lies in 63..=126
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let mut vals = Vec::with_capacity(bytes.len());
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { byte, offset });
        }
        vals.push(byte - OFFSET);
    }
    let (n, body) = decode_order(&vals)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::BadLength {
            expected,
            found: body.len(),
        });
    }
    if bits % 6 != 0 {
        let pad = 6 - bits % 6;
        if body[expected - 1] & ((1u8 << pad) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding);
        }
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if body[k / 6] >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

fn decode_order(vals: &[u8]) -> Result<(usize, &[u8]), Graph6Error> {
    // header values are already offset-free; 63 marks an extended header
    let wide = |digits: &[u8]| digits.iter().fold(0usize, |acc, &d| (acc << 6) | d as usize);
    if vals[0] != 63 {
        return Ok((vals[0] as usize, &vals[1..]));
    }
    if vals.len() >= 2 && vals[1] == 63 {
        if vals.len() < 8 {
            return Err(Graph6Error::BadHeader);
        }
        return Ok((wide(&vals[2..8]), &vals[8..]));
    }
    if vals.len() < 4 {
        return Err(Graph6Error::BadHeader);
    }
    Ok((wide(&vals[1..4]), &vals[4..]))
}
