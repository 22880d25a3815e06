//! graph6 encoding and the plain-text edge-list fallback.
//!
//! graph6 packs the upper triangle column by column, `(0,1), (0,2), (1,2),
//! (0,3), ...`, six bits per byte, most significant bit first, each byte
//! offset by 63. The vertex count precedes it: one byte for `n ≤ 62`,
//! otherwise `~` followed by three bytes.

use super::{Graph, GraphBuilder};
use crate::bitset::MAX_VERTICES;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn data_byte(c: u8) -> Result<u8> {
    if (63..=126).contains(&c) {
        Ok(c - 63)
    } else {
        Err(Error::Graph6(format!("invalid byte 0x{c:02x}")))
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty record".into()));
    }

    let (n, body) = if bytes[0] == b'~' {
        if bytes.get(1) == Some(&b'~') {
            return Err(Error::Graph6("8-byte length field not supported".into()));
        }
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated length field".into()));
        }
        let mut n = 0usize;
        for &c in &bytes[1..4] {
            n = (n << 6) | data_byte(c)? as usize;
        }
        if n < 63 {
            return Err(Error::Graph6(format!("non-canonical long length field for n={n}")));
        }
        (n, &bytes[4..])
    } else {
        (data_byte(bytes[0])? as usize, &bytes[1..])
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n, MAX_VERTICES));
    }

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for n={n}, found {}",
            body.len()
        )));
    }

    let mut b = GraphBuilder::new(n)?;
    let mut k = 0usize;
    let mut body_iter = body.iter();
    let mut current = 0u8;
    'outer: for j in 1..n {
        for i in 0..j {
            if k.is_multiple_of(6) {
                current = data_byte(*body_iter.next().expect("length checked"))?;
            }
            if current >> (5 - k % 6) & 1 == 1 {
                b.add_edge(i, j)?;
            }
            k += 1;
            if k == bits {
                break 'outer;
            }
        }
    }
    if !k.is_multiple_of(6) {
        let pad = 6 - k % 6;
        if current & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(b.build())
}

/// Standard graph6 record without header or trailing newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n) / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k.is_multiple_of(6) {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        out.push((acc << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Parses the edge-list text format.
///
/// The first segment is the vertex count; every later segment is an edge
/// `u v`. Segments are separated by newlines or `;`, and `#` starts a comment.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut segments = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(|l| l.split(';'))
        .map(str::trim)
        .filter(|s| !s.is_empty());
    let head = segments
        .next()
        .ok_or_else(|| Error::EdgeList("missing vertex count".into()))?;
    let n: usize = head
        .parse()
        .map_err(|_| Error::EdgeList(format!("bad vertex count '{head}'")))?;
    let mut b = GraphBuilder::new(n)?;
    for seg in segments {
        let mut it = seg.split_whitespace();
        let mut endpoint = || -> Result<usize> {
            let tok = it
                .next()
                .ok_or_else(|| Error::EdgeList(format!("edge '{seg}' needs two endpoints")))?;
            tok.parse()
                .map_err(|_| Error::EdgeList(format!("bad vertex '{tok}'")))
        };
        let (u, v) = (endpoint()?, endpoint()?);
        if it.next().is_some() {
            return Err(Error::EdgeList(format!("trailing tokens in edge '{seg}'")));
        }
        b.add_edge(u, v)?;
    }
    Ok(b.build())
}

/// Accepts either a graph6 record or the edge-list format.
///
/// graph6 records never start with a digit (the first byte is at least 63),
/// so a leading digit selects the edge-list parser.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let trimmed = text.trim();
    if trimmed.starts_with(|c: char| c.is_ascii_digit()) {
        parse_edge_list(trimmed)
    } else {
        parse_graph6(trimmed.lines().next().unwrap_or(""))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_multipartite, cycle, named_graph, NamedGraph, PartSizes};
    use proptest::prelude::*;

    #[test]
    fn decodes_star_record() {
        // Pairs in order (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),(0,4),(1,4),(2,4),(3,4);
        // '?' = 000000, '{' = 111100, so exactly the four pairs touching vertex 4.
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 4), (1, 4), (2, 4), (3, 4)]
        );
        assert_eq!(
            parse_graph6("DF[").unwrap().edges().collect::<Vec<_>>(),
            vec![(0, 3), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
        );
    }

    #[test]
    fn small_records() {
        let g = parse_graph6("@").unwrap();
        assert_eq!((g.n(), g.edge_count()), (1, 0));
        assert_eq!(to_graph6(&g), "@");
        assert_eq!(to_graph6(&complete(2).unwrap()), "A_");
        assert_eq!(to_graph6(&Graph::empty(0).unwrap()), "?");
    }

    #[test]
    fn header_is_stripped() {
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap(), complete(2).unwrap());
    }

    #[test]
    fn malformed_records() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("D?").is_err()); // too short
        assert!(parse_graph6("D?{{").is_err()); // too long
        assert!(parse_graph6("A`").is_err()); // padding bit set
        assert!(parse_graph6("A ").is_err()); // byte below 63
        assert!(parse_graph6("~?").is_err()); // truncated long length
        assert!(parse_graph6("~???").is_err()); // long form for small n
    }

    #[test]
    fn long_form_round_trip() {
        let g = cycle(100).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn family_round_trips() {
        for name in NamedGraph::ALL {
            let g = named_graph(name);
            assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g, "{name:?}");
        }
        let g = complete_multipartite(&PartSizes::new(vec![3, 1, 4]).unwrap());
        assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_format() {
        let g = parse_edge_list("4\n0 1\n1 2 # path\n2 3\n").unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(parse_edge_list("4; 0 1; 1 2; 2 3").unwrap(), g);
        assert!(parse_edge_list("3; 0 0").is_err());
        assert!(parse_edge_list("3; 0 1; 1 0").is_err());
        assert!(parse_edge_list("3; 0").is_err());
        assert!(parse_edge_list("x").is_err());
        assert!(parse_edge_list("").is_err());
    }

    #[test]
    fn auto_detection() {
        assert_eq!(parse_graph("A_").unwrap(), complete(2).unwrap());
        assert_eq!(parse_graph("2; 0 1").unwrap(), complete(2).unwrap());
        assert_eq!(parse_graph("2\n0 1\n").unwrap(), complete(2).unwrap());
    }

    proptest! {
        #[test]
        fn round_trip_random(n in 0usize..70, seed in any::<u64>()) {
            let mut edges = Vec::new();
            let mut x = seed | 1;
            for j in 1..n {
                for i in 0..j {
                    x ^= x << 13; x ^= x >> 7; x ^= x << 17;
                    if x & 3 == 0 { edges.push((i, j)); }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let s = to_graph6(&g);
            prop_assert_eq!(parse_graph6(&s).unwrap(), g);
            prop_assert_eq!(to_graph6(&parse_graph6(&s).unwrap()), s);
        }
    }
}
