//! graph6 text format: the interchange encoding for all graph input/output.
//!
//! Standard format: size header N(n), then the upper triangle of the
//! adjacency matrix in column order, packed big-endian into 6-bit chunks,
//! each chunk printed as `chunk + 63`.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("malformed graph6 size header")]
    MalformedHeader,
    #[error("graph too large for graph6 ({0} vertices)")]
    TooLarge(usize),
    #[error("byte {byte:#04x} at position {pos} outside graph6 range 63..=126")]
    OutOfRange { byte: u8, pos: usize },
    #[error("truncated payload: expected {expected} characters, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("{0} unexpected trailing characters")]
    TrailingData(usize),
}

const MAX_N: usize = 258_047;

/// Encodes a graph as a graph6 line (no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_N, "graph too large for graph6");
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(63 + n as u8);
    } else {
        bytes.push(126);
        bytes.push(63 + ((n >> 12) & 63) as u8);
        bytes.push(63 + ((n >> 6) & 63) as u8);
        bytes.push(63 + (n & 63) as u8);
    }
    let mut chunk = 0u8;
    let mut nbits = 0u8;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                bytes.push(63 + chunk);
                chunk = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        bytes.push(63 + (chunk << (6 - nbits)));
    }
    String::from_utf8(bytes).unwrap()
}

/// Decodes one graph6 line. Accepts the optional `>>graph6<<` prefix.
pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::MalformedHeader);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::OutOfRange { byte: b, pos });
        }
    }
    let (n, header_len) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // 8-byte form encodes n > 258047, beyond this crate's scope
            return Err(Graph6Error::TooLarge(usize::MAX));
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::MalformedHeader);
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        if n <= 62 {
            // long form used for a size that fits the short form
            return Err(Graph6Error::MalformedHeader);
        }
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    let payload = &bytes[header_len..];
    if payload.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: payload.len(),
        });
    }
    if payload.len() > expected {
        return Err(Graph6Error::TrailingData(payload.len() - expected));
    }
    let mut g = Graph::empty(n);
    let mut bit_index = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = payload[bit_index / 6] - 63;
            let bit = (byte >> (5 - (bit_index % 6))) & 1;
            if bit == 1 {
                g.add_edge(i, j);
            }
            bit_index += 1;
            if bit_index == nbits {
                break 'outer;
            }
        }
    }
    Ok(g)
}

/// Parses one graph per line, ignoring blank lines.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, Graph6Error> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(from_graph6)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_encodings() {
        // single vertex
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        // K3: n=3 header 'B', bits 111 padded to 111000 = 56 -> 'w'
        assert_eq!(to_graph6(&Graph::triangle()), "Bw");
        assert_eq!(from_graph6("Bw").unwrap(), Graph::triangle());
        // the canonical 5-vertex example from the format description
        let g = Graph::with_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(to_graph6(&g), "DQc");
    }

    #[test]
    fn round_trip_small() {
        for g in [
            Graph::empty(0),
            Graph::empty(5),
            Graph::path(7),
            Graph::cycle(6),
            Graph::complete(9),
            Graph::star(5),
        ] {
            assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
        }
    }

    #[test]
    fn round_trip_long_header() {
        // n = 63 needs the 3-byte size form
        let g = Graph::cycle(63);
        let s = to_graph6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(from_graph6(&s).unwrap(), g);
        let big = Graph::cycle(244);
        assert_eq!(from_graph6(&to_graph6(&big)).unwrap(), big);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(from_graph6(""), Err(Graph6Error::MalformedHeader));
        assert!(matches!(
            from_graph6("B"),
            Err(Graph6Error::Truncated { expected: 1, found: 0 })
        ));
        assert!(matches!(
            from_graph6("B\x1fw"),
            Err(Graph6Error::OutOfRange { byte: 0x1f, pos: 1 })
        ));
        assert!(matches!(
            from_graph6("Bww"),
            Err(Graph6Error::TrailingData(1))
        ));
    }

    #[test]
    fn optional_prefix() {
        assert_eq!(from_graph6(">>graph6<<Bw").unwrap(), Graph::triangle());
    }
}
