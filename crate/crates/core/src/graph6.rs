//! graph6 encoding and decoding, bit-exact per the published format.
//!
//! Layout: a size field N(n), then the upper triangle of the adjacency
//! matrix read column by column ((0,1), (0,2), (1,2), (0,3), ...), packed
//! big-endian into 6-bit groups, each group offset by 63 into the printable
//! range `?`..`~`. The trailing group is padded with zero bits; non-zero
//! padding is rejected. The optional `>>graph6<<` header is accepted on
//! input and never emitted.

use crate::error::Error;
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";
const OFFSET: u8 = 63;
/// Largest encodable vertex count (the 8-byte size form carries 36 bits).
const MAX_N: u64 = (1 << 36) - 1;

/// Encode a graph as a canonical graph6 string.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    emit_size(&mut out, n as u64);
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(group + OFFSET);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn emit_size(out: &mut Vec<u8>, n: u64) {
    debug_assert!(n <= MAX_N);
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258_047 {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    } else {
        out.push(b'~');
        out.push(b'~');
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }
}

/// Decode a graph6 string (with or without the standard header).
pub fn parse_graph6(text: &str) -> Result<Graph, Error> {
    let text = text.strip_prefix(HEADER).unwrap_or(text).trim_end_matches(['\n', '\r']);
    let bytes = text.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(OFFSET..=126).contains(&b)) {
        return Err(Error::parse(format!(
            "byte 0x{b:02x} outside the graph6 printable range"
        )));
    }
    let (n, rest) = parse_size(bytes)?;
    if n > MAX_N {
        return Err(Error::parse(format!("vertex count {n} exceeds graph6 range")));
    }
    let n = usize::try_from(n).map_err(|_| Error::size("vertex count does not fit usize"))?;
    let bits = n * (n.max(1) - 1) / 2;
    let expect = bits.div_ceil(6);
    if rest.len() != expect {
        return Err(Error::parse(format!(
            "payload is {} groups, expected {expect} for n = {n}",
            rest.len()
        )));
    }
    let mut g = Graph::empty(n);
    let mut idx = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[idx / 6] - OFFSET;
            if byte >> (5 - idx % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            idx += 1;
        }
    }
    if idx % 6 != 0 {
        let padding = rest[idx / 6] - OFFSET;
        let mask = (1u8 << (6 - idx % 6)) - 1;
        if padding & mask != 0 {
            return Err(Error::parse("non-zero padding bits".to_string()));
        }
    }
    Ok(g)
}

fn parse_size(bytes: &[u8]) -> Result<(u64, &[u8]), Error> {
    match bytes {
        [] => Err(Error::parse("empty graph6 string")),
        [b'~', b'~', rest @ ..] => {
            if rest.len() < 6 {
                return Err(Error::parse("truncated 8-byte size field"));
            }
            let n = rest[..6]
                .iter()
                .fold(0u64, |acc, &b| (acc << 6) | u64::from(b - OFFSET));
            Ok((n, &rest[6..]))
        }
        [b'~', rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::parse("truncated 4-byte size field"));
            }
            let n = rest[..3]
                .iter()
                .fold(0u64, |acc, &b| (acc << 6) | u64::from(b - OFFSET));
            if n <= 62 {
                return Err(Error::parse("overlong size encoding"));
            }
            Ok((n, &rest[3..]))
        }
        [b, rest @ ..] => Ok((u64::from(b - OFFSET), rest)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_on_five_vertices_decodes_from_reference_string() {
        // "D?{": centre 4 adjacent to 0..3, no other edges.
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(emit_graph6(&g), "D?{");
    }

    #[test]
    fn single_vertex_is_at_sign() {
        assert_eq!(emit_graph6(&Graph::empty(1)), "@");
        assert_eq!(parse_graph6("@").unwrap().n(), 1);
        assert_eq!(emit_graph6(&Graph::empty(0)), "?");
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
    }

    #[test]
    fn header_is_accepted_and_stripped() {
        let g = parse_graph6(">>graph6<<D?{").unwrap();
        assert_eq!(emit_graph6(&g), "D?{");
    }

    #[test]
    fn long_size_fields_roundtrip() {
        for n in [63usize, 64, 100, 1000] {
            let g = Graph::empty(n);
            let s = emit_graph6(&g);
            let back = parse_graph6(&s).unwrap();
            assert_eq!(back.n(), n);
            assert_eq!(back.edge_count(), 0);
        }
        // The 8-byte form starts at 258048; graphs that large would need
        // gigabytes of adjacency matrix, so check the size field alone.
        for n in [258_047u64, 258_048, MAX_N] {
            let mut out = Vec::new();
            emit_size(&mut out, n);
            let (back, rest) = parse_size(&out).unwrap();
            assert_eq!(back, n);
            assert!(rest.is_empty());
            assert_eq!(out.len(), if n <= 258_047 { 4 } else { 8 });
        }
    }

    #[test]
    fn malformed_strings_are_rejected() {
        assert!(parse_graph6("").is_err());
        // Payload too short / too long for the declared size.
        assert!(parse_graph6("D?").is_err());
        assert!(parse_graph6("D?{{").is_err());
        // Non-zero padding bits: K_2 uses one bit, the other five must be 0.
        assert!(parse_graph6("A") .is_err());
        assert!(parse_graph6("A?").unwrap().edge_count() == 0);
        assert!(parse_graph6("A@").is_err());
        // Byte below '?'.
        assert!(parse_graph6("D>{").is_err());
        // Overlong size field: 62 must use the single-byte form.
        assert!(parse_graph6("~??}").is_err());
    }

    #[test]
    fn every_labelled_graph_on_up_to_five_vertices_roundtrips() {
        for n in 0..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            for mask in 0u64..1 << pairs.len() {
                let mut g = Graph::empty(n);
                for (k, &(u, v)) in pairs.iter().enumerate() {
                    if mask >> k & 1 == 1 {
                        g.add_edge(u, v);
                    }
                }
                let back = parse_graph6(&emit_graph6(&g)).unwrap();
                assert!(back.same_adjacency(&g));
            }
        }
    }
}
