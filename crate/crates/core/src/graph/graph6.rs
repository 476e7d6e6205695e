//! graph6 encoding for graphs on plain vertices.
//!
//! The vertex numbering of graph6 is positional, so only graphs whose labels
//! are exactly `Plain(0..n)` are accepted by [`to_graph6`]; use
//! [`Graph::to_plain`] first for labeled graphs.

use std::sync::Arc;

use super::{BitMatrix, Graph, VertexLabel};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";
const MAX_ORDER: usize = 258_047;

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    let contiguous = g
        .vertices()
        .iter()
        .enumerate()
        .all(|(i, v)| *v == VertexLabel::Plain(i as u32));
    if !contiguous {
        return Err(Error::InvalidLabel(
            "graph6 needs plain vertices numbered 0..n".into(),
        ));
    }
    if n > MAX_ORDER {
        return Err(Error::Parse(format!("order {n} too large for graph6")));
    }
    let mut out = Vec::with_capacity(4 + n * n / 12);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push((n >> 12 & 63) as u8 + 63);
        out.push((n >> 6 & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge_idx(i, j) as u8;
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
    Ok(String::from_utf8(out).expect("graph6 is printable ascii"))
}

pub fn from_graph6(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    let bad = |what: &str| Error::Parse(format!("graph6: {what}"));
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(bad("byte outside 63..=126"));
    }
    let (n, body) = match bytes {
        [126, 126, ..] => return Err(bad("orders above 258047 are not supported")),
        [126, a, b, c, rest @ ..] => {
            let n = ((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63);
            (n, rest)
        }
        [126, ..] => return Err(bad("truncated order")),
        [first, rest @ ..] => (*first as usize - 63, rest),
        [] => return Err(bad("empty input")),
    };
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(bad("body length does not match the order"));
    }
    let mut adj = BitMatrix::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                adj.set(i, j);
                adj.set(j, i);
            }
            k += 1;
        }
    }
    if n < 2 {
        return Err(Error::TooFewVertices(n));
    }
    let vertices: Arc<[VertexLabel]> = (0..n as u32).map(VertexLabel::Plain).collect();
    Ok(Graph::from_parts(vertices, adj))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_encodings() {
        // edges 0-2, 0-4, 1-3, 3-4
        let g = Graph::plain(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g).unwrap(), "DQc");
        let k4 = Graph::complete((0..4).map(VertexLabel::Plain)).unwrap();
        assert_eq!(to_graph6(&k4).unwrap(), "C~");
        assert_eq!(from_graph6("DQc").unwrap(), g);
        assert_eq!(from_graph6(">>graph6<<C~\n").unwrap(), k4);
    }

    #[test]
    fn medium_order_round_trip() {
        let edges: Vec<_> = (0..99).map(|i| (i, i + 1)).collect();
        let g = Graph::plain(100, &edges).unwrap();
        let s = to_graph6(&g).unwrap();
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("D").is_err());
        assert!(from_graph6("C~~").is_err());
        assert!(from_graph6("@").is_err());
        let labeled = Graph::new(
            [VertexLabel::Base(1), VertexLabel::Base(2)],
            [(VertexLabel::Base(1), VertexLabel::Base(2))],
        )
        .unwrap();
        assert!(to_graph6(&labeled).is_err());
        assert_eq!(to_graph6(&labeled.to_plain()).unwrap(), "A_");
    }
}
