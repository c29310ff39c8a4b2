//! The graph6 interchange format for labelled simple graphs.
//!
//! Layout: an order header (one byte `n + 63` for n <= 62, or `~` followed
//! by three 6-bit bytes for 63 <= n <= 258047), then the upper triangle
//! packed column by column — bits (0,1), (0,2), (1,2), (0,3), ... — six
//! bits per printable character, zero padded. All characters lie in
//! `?`..=`~` (63..=126).

use thiserror::Error;

use crate::graph::{Graph, GraphError};

/// Largest order the three-byte header form can carry.
pub const MAX_GRAPH6_ORDER: usize = 258_047;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("malformed graph6 input: {0}")]
    Malformed(String),
    #[error("graph6 order {0} not supported (maximum {MAX_GRAPH6_ORDER})")]
    UnsupportedOrder(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Encodes the labelled graph; no isomorphism canonicalisation.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= MAX_GRAPH6_ORDER, "order {n} too large for graph6");
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    }
    let mut acc: u8 = 0;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        acc <<= 6 - filled;
        out.push(63 + acc);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 string (an optional `>>graph6<<` header is
/// stripped). The result must satisfy the graph invariants, so
/// disconnected inputs and orders below 2 are rejected.
pub fn decode_graph6(s: &str) -> Result<Graph, Graph6Error> {
    let s = s.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Malformed("empty input".into()));
    }
    if let Some(&bad) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Graph6Error::Malformed(format!(
            "byte {bad:#04x} outside the printable graph6 range"
        )));
    }

    let (n, header_len) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        // six-byte order form for n >= 258048
        if bytes.len() < 8 {
            return Err(Graph6Error::Malformed("truncated order header".into()));
        }
        let mut n = 0usize;
        for &b in &bytes[2..8] {
            n = (n << 6) | (b - 63) as usize;
        }
        return Err(Graph6Error::UnsupportedOrder(n));
    } else {
        if bytes.len() < 4 {
            return Err(Graph6Error::Malformed("truncated order header".into()));
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | (bytes[3] - 63) as usize;
        (n, 4)
    };
    if n > MAX_GRAPH6_ORDER {
        return Err(Graph6Error::UnsupportedOrder(n));
    }

    let bit_count = n * n.saturating_sub(1) / 2;
    let body = &bytes[header_len..];
    if body.len() != bit_count.div_ceil(6) {
        return Err(Graph6Error::Malformed(format!(
            "expected {} body characters for order {n}, found {}",
            bit_count.div_ceil(6),
            body.len()
        )));
    }

    let mut edges = Vec::new();
    let mut index = 0usize;
    'fill: for v in 1..n {
        for u in 0..v {
            let byte = body[index / 6] - 63;
            let bit = (byte >> (5 - index % 6)) & 1;
            if bit == 1 {
                edges.push((u, v));
            }
            index += 1;
            if index == bit_count {
                break 'fill;
            }
        }
    }
    if bit_count > 0 {
        let last = body[body.len() - 1] - 63;
        let pad = body.len() * 6 - bit_count;
        if pad > 0 && last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::Malformed(
                "nonzero padding bits in final character".into(),
            ));
        }
    }

    Ok(Graph::from_edges(n, &edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn frozen_small_encodings() {
        assert_eq!(encode_graph6(&graph(2, &[(0, 1)])), "A_");
        assert_eq!(encode_graph6(&graph(3, &[(0, 1), (1, 2)])), "Bg");
    }

    #[test]
    fn frozen_small_decodings() {
        let k2 = decode_graph6("A_").unwrap();
        assert_eq!((k2.order(), k2.edge_count()), (2, 1));
        let p3 = decode_graph6("Bg").unwrap();
        assert_eq!(p3.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn header_prefix_is_stripped() {
        assert!(decode_graph6(">>graph6<<A_").is_ok());
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(
            decode_graph6(""),
            Err(Graph6Error::Malformed(_))
        ));
        assert!(matches!(
            decode_graph6("A"),
            Err(Graph6Error::Malformed(_))
        ));
        assert!(matches!(
            decode_graph6("A_!"),
            Err(Graph6Error::Malformed(_))
        ));
        // K_2 with a stray 1 in the padding
        assert!(matches!(
            decode_graph6("A`"),
            Err(Graph6Error::Malformed(_))
        ));
    }

    #[test]
    fn disconnected_and_tiny_inputs_are_rejected() {
        // two isolated vertices
        assert!(matches!(
            decode_graph6("A?"),
            Err(Graph6Error::Graph(GraphError::Disconnected))
        ));
        // single vertex
        assert!(matches!(
            decode_graph6("@"),
            Err(Graph6Error::Graph(GraphError::OrderTooSmall(1)))
        ));
    }

    #[test]
    fn oversized_order_is_rejected() {
        let huge = decode_graph6("~~??????");
        assert!(matches!(huge, Err(Graph6Error::UnsupportedOrder(_))));
    }

    #[test]
    fn multibyte_order_round_trip() {
        // a 63-vertex star forces the long header
        let edges: Vec<(usize, usize)> = (1..63).map(|v| (0, v)).collect();
        let g = graph(63, &edges);
        let enc = encode_graph6(&g);
        assert!(enc.starts_with('~'));
        let back = decode_graph6(&enc).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn round_trip_named_graphs() {
        let samples = [
            graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]),
            graph(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]),
            graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]),
        ];
        for g in samples {
            assert_eq!(decode_graph6(&encode_graph6(&g)).unwrap(), g);
        }
    }
}
