//! The graph6 text encoding (header-less).
//!
//! The upper triangle of the adjacency matrix is read column by column,
//! `(0,1), (0,2), (1,2), (0,3), ...`, packed big-endian into 6-bit groups and
//! offset by 63 into printable ASCII. Orders above 62 use the `~` prefix with
//! an 18-bit count.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

const OFFSET: u8 = 63;

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(1 + (n * (n - 1) / 2).div_ceil(6) + 3);
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row = g.neighbors(j);
        for i in 0..j {
            acc = acc << 1 | row.contains(i) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decodes a single graph6 string. Trailing `\n`/`\r\n` is accepted; any
/// other surplus byte, a short body or non-zero padding is an error.
pub fn decode(s: &str) -> Result<Graph> {
    let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
    let err = |msg: String| Error::Graph6(msg);
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(err(format!("byte {b:#04x} outside the printable range 63..=126")));
        }
    }
    let (n, body) = match bytes {
        [] => return Err(err("empty string".into())),
        [126, 126, ..] => return Err(err("orders above 258047 are not supported".into())),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(err("truncated vertex count".into()));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| acc << 6 | (b - OFFSET) as usize);
            if n <= 62 {
                return Err(err(format!("non-minimal vertex count encoding for n = {n}")));
            }
            (n, &rest[3..])
        }
        [first, rest @ ..] => ((first - OFFSET) as usize, rest),
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(err(format!("expected {expected} body bytes for n = {n}, found {}", body.len())));
    }
    let bit = |k: usize| (body[k / 6] - OFFSET) >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(err("non-zero padding bits".into()));
    }
    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency_unchecked(adj))
}

/// Reads one graph per non-empty line.
pub fn read_stream<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Graph>> {
    reader.lines().enumerate().filter(|(_, l)| l.as_ref().map_or(true, |s| !s.trim().is_empty())).map(|(i, l)| {
        let line = l?;
        decode(line.trim()).map_err(|e| Error::BadStream { line: i + 1, source: Box::new(e) })
    })
}
