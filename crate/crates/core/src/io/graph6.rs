//! graph6 encoding for graphs on at most 62 vertices.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const GRAPH6_MAX: usize = 62;

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX {
        return Err(Error::TooLarge { order: n, max: GRAPH6_MAX });
    }
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            used += 1;
            if used == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push(((acc << (6 - used)) + 63) as char);
    }
    Ok(out)
}

pub fn decode_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let (&first, body) = bytes.split_first().ok_or_else(|| Error::Graph6("empty string".into()))?;
    if !(63..=126).contains(&first) {
        return Err(Error::BadChar { line: 1, ch: first as char });
    }
    let n = (first - 63) as usize;
    if n > GRAPH6_MAX {
        return Err(Error::TooLarge { order: n, max: GRAPH6_MAX });
    }
    let pairs = n * n.saturating_sub(1) / 2;
    if body.len() != pairs.div_ceil(6) {
        return Err(Error::Graph6(format!("expected {} data bytes for {n} vertices, found {}", pairs.div_ceil(6), body.len())));
    }
    let mut bits = Vec::with_capacity(body.len() * 6);
    for &b in body {
        if !(63..=126).contains(&b) {
            return Err(Error::BadChar { line: 1, ch: b as char });
        }
        let v = b - 63;
        bits.extend((0..6).rev().map(|s| v >> s & 1 == 1));
    }
    if bits[pairs..].iter().any(|&b| b) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn hand_encoded() {
        assert_eq!(encode_graph6(&Graph::empty(4).unwrap()).unwrap(), "C?");
        assert_eq!(encode_graph6(&Graph::complete(2).unwrap()).unwrap(), "A_");
        assert_eq!(encode_graph6(&Graph::empty(0).unwrap()).unwrap(), "?");
        // K4: six ones in one group
        assert_eq!(encode_graph6(&Graph::complete(4).unwrap()).unwrap(), "C~");
        assert_eq!(decode_graph6("A_").unwrap(), Graph::complete(2).unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(decode_graph6("").is_err());
        assert!(decode_graph6("C").is_err());
        assert!(matches!(decode_graph6("C\x10"), Err(Error::BadChar { .. })));
        // padding bit set: K2 has one data bit
        assert!(decode_graph6("A`").is_err());
        assert!(matches!(encode_graph6(&Graph::empty(63).unwrap()), Err(Error::TooLarge { .. })));
    }

    proptest! {
        #[test]
        fn round_trip(n in 0usize..=20, bits in proptest::collection::vec(any::<bool>(), 190)) {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] { edges.push((i, j)); }
                    k += 1;
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            prop_assert_eq!(decode_graph6(&encode_graph6(&g).unwrap()).unwrap(), g);
        }
    }
}
