//! graph6 encoding: a size prefix followed by the upper triangle of the
//! adjacency matrix in column order (`x(0,1), x(0,2), x(1,2), x(0,3), ...`),
//! packed big-endian into 6-bit groups each offset by 63.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const BIAS: u8 = 63;

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8> {
    match bytes.get(offset) {
        None => Err(err(offset, "unexpected end of input")),
        Some(&b) if (BIAS..=BIAS + 63).contains(&b) => Ok(b - BIAS),
        Some(&b) => Err(err(
            offset,
            format!("byte 0x{b:02x} outside the graph6 range 63..=126"),
        )),
    }
}

/// Parses one graph6 line. An optional `>>graph6<<` header and trailing
/// line terminator are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let trimmed = text.trim_end_matches(['\n', '\r']);
    let (bytes, base) = match trimmed.strip_prefix(">>graph6<<") {
        Some(rest) => (rest.as_bytes(), 10),
        None => (trimmed.as_bytes(), 0),
    };
    let at = |o: usize| base + o;

    let first = sextet(bytes, 0).map_err(|_| err(at(0), "missing or invalid size byte"))?;
    let (n, mut pos) = if first < 63 {
        (first as usize, 1)
    } else if bytes.get(1) == Some(&b'~') {
        let mut n = 0usize;
        for k in 0..6 {
            n = (n << 6) | sextet(bytes, 2 + k).map_err(|e| shift(e, base))? as usize;
        }
        if n < 258_048 {
            return Err(err(at(0), "eight-byte size prefix used for n < 258048"));
        }
        (n, 8)
    } else {
        let mut n = 0usize;
        for k in 0..3 {
            n = (n << 6) | sextet(bytes, 1 + k).map_err(|e| shift(e, base))? as usize;
        }
        if n < 63 {
            return Err(err(at(0), "four-byte size prefix used for n < 63"));
        }
        (n, 4)
    };
    if n == 0 {
        return Err(err(at(0), "graphs need at least one vertex"));
    }
    if n > MAX_VERTICES {
        return Err(err(
            at(0),
            format!("n = {n} exceeds the limit of {MAX_VERTICES}"),
        ));
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() != pos + nbytes {
        let off = pos + nbytes.min(bytes.len().saturating_sub(pos));
        return Err(err(
            at(off),
            format!(
                "expected {} data bytes, found {}",
                nbytes,
                bytes.len().saturating_sub(pos)
            ),
        ));
    }

    let mut g = Graph::empty(n);
    let mut bit = 0usize;
    let (mut i, mut j) = (0usize, 1usize);
    for _ in 0..nbytes {
        let v = sextet(bytes, pos).map_err(|e| shift(e, base))?;
        for s in (0..6).rev() {
            let set = v >> s & 1 == 1;
            if bit < nbits {
                if set {
                    g.add_edge(i, j);
                }
                i += 1;
                if i == j {
                    i = 0;
                    j += 1;
                }
            } else if set {
                return Err(err(at(pos), "nonzero padding bits"));
            }
            bit += 1;
        }
        pos += 1;
    }
    Ok(g)
}

fn shift(e: Error, base: usize) -> Error {
    match e {
        Error::Graph6 { offset, reason } => Error::Graph6 {
            offset: offset + base,
            reason,
        },
        other => other,
    }
}

/// Canonical (shortest) graph6 encoding, without header or newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + BIAS);
    } else if n < 258_048 {
        out.push(b'~');
        for k in (0..3).rev() {
            out.push(((n >> (6 * k)) & 63) as u8 + BIAS);
        }
    } else {
        out.extend_from_slice(b"~~");
        for k in (0..6).rev() {
            out.push(((n >> (6 * k)) & 63) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}
