//! graph6 encoding and decoding, plus a small edge-list text format.
//!
//! The graph6 codec follows the standard header-less format: printable ASCII,
//! 6-bit groups offset by 63, upper-triangle adjacency bits in column order
//! `(0,1), (0,2), (1,2), (0,3), ...`. Round-tripping is the identity.

use thiserror::Error;

use crate::bitset::MAX_VERTICES;
use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("graph6 order {0} exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("invalid graph6 byte {0:#x}")]
    InvalidByte(u8),
    #[error("graph6 string has wrong length: expected {expected} bytes, got {got}")]
    WrongLength { expected: usize, got: usize },
    #[error("trailing padding bits must be zero")]
    DirtyPadding,
    #[error("malformed edge list: {0}")]
    BadEdgeList(String),
}

fn order_prefix(n: usize) -> Vec<u8> {
    if n <= 62 {
        vec![63 + n as u8]
    } else {
        // 126 '~' followed by 18 bits, 6 per byte, most significant first.
        vec![
            126,
            63 + ((n >> 12) & 0x3f) as u8,
            63 + ((n >> 6) & 0x3f) as u8,
            63 + (n & 0x3f) as u8,
        ]
    }
}

/// Encodes a graph as a graph6 string.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut bytes = order_prefix(n);

    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group <<= 1;
            if g.has_edge(i, j) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                bytes.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        group <<= 6 - filled;
        bytes.push(63 + group);
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

/// Decodes a header-less graph6 string.
pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim().as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let (n, rest) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // The 8-byte huge-order form starts well beyond our capacity.
            return Err(Graph6Error::TooManyVertices(MAX_VERTICES + 1));
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::WrongLength {
                expected: 4,
                got: bytes.len(),
            });
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            if !(63..=126).contains(&b) {
                return Err(Graph6Error::InvalidByte(b));
            }
            n = (n << 6) | (b - 63) as usize;
        }
        (n, &bytes[4..])
    } else {
        let b = bytes[0];
        if !(63..=125).contains(&b) {
            return Err(Graph6Error::InvalidByte(b));
        }
        ((b - 63) as usize, &bytes[1..])
    };

    if n > MAX_VERTICES {
        return Err(Graph6Error::TooManyVertices(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if rest.len() != expected {
        return Err(Graph6Error::WrongLength {
            expected,
            got: rest.len(),
        });
    }

    let mut g = Graph::new(n);
    let mut bit_index = 0usize;
    'outer: for &b in rest {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte(b));
        }
        let group = b - 63;
        for k in 0..6 {
            let bit = (group >> (5 - k)) & 1;
            if bit_index >= nbits {
                if bit != 0 {
                    return Err(Graph6Error::DirtyPadding);
                }
                continue 'outer;
            }
            if bit == 1 {
                let (i, j) = slot_to_pair(bit_index);
                g.add_edge(i, j);
            }
            bit_index += 1;
        }
    }
    Ok(g)
}

/// Maps a column-order upper-triangle slot index to its `(i, j)` pair.
fn slot_to_pair(slot: usize) -> (usize, usize) {
    let mut j = 1usize;
    let mut base = 0usize;
    while base + j <= slot {
        base += j;
        j += 1;
    }
    (slot - base, j)
}

/// Parses the plain-text graph format: the first non-comment line is the
/// vertex count, each following line either one edge `u v` or an adjacency
/// row `u: v1 v2 ...`. Lines starting with `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, Graph6Error> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or(Graph6Error::Empty)?;
    let n: usize = header.parse().map_err(|_| {
        Graph6Error::BadEdgeList(format!("expected a vertex count, got {header:?}"))
    })?;
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooManyVertices(n));
    }
    let parse = |s: &str| -> Result<usize, Graph6Error> {
        let x: usize = s
            .parse()
            .map_err(|_| Graph6Error::BadEdgeList(format!("bad vertex label {s:?}")))?;
        if x >= n {
            return Err(Graph6Error::BadEdgeList(format!(
                "vertex {x} out of range for n={n}"
            )));
        }
        Ok(x)
    };
    let mut g = Graph::new(n);
    let mut add = |u: usize, v: usize| -> Result<(), Graph6Error> {
        if u == v {
            return Err(Graph6Error::BadEdgeList(format!("self-loop at {u}")));
        }
        g.add_edge(u, v);
        Ok(())
    };
    for line in lines {
        if let Some((head, rest)) = line.split_once(':') {
            let u = parse(head.trim())?;
            for w in rest.split_whitespace() {
                add(u, parse(w)?)?;
            }
            continue;
        }
        let mut it = line.split_whitespace();
        let (u, v) = match (it.next(), it.next(), it.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => {
                return Err(Graph6Error::BadEdgeList(format!(
                    "expected `u v` or `u: v1 v2 ...`, got {line:?}"
                )))
            }
        };
        add(parse(u)?, parse(v)?)?;
    }
    Ok(g)
}

/// Writes the edge-list text format parsed by [`parse_edge_list`].
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Reads a graph from either graph6 or edge-list text, trying graph6 first.
pub fn parse_graph(text: &str) -> Result<Graph, Graph6Error> {
    let trimmed = text.trim();
    if trimmed.lines().count() <= 1 && !trimmed.is_empty() {
        if let Ok(g) = from_graph6(trimmed) {
            return Ok(g);
        }
    }
    parse_edge_list(text)
}
