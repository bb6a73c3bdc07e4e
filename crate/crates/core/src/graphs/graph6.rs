//! McKay's graph6 format: a size prefix followed by the upper triangle of
//! the adjacency matrix in column-major order, six bits per byte, each
//! byte offset by 63.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 { offset, message: message.into() }
}

/// Parses one graph6 record. A trailing line terminator is ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (bytes, base) = match line.strip_prefix(HEADER) {
        Some(rest) => (rest.as_bytes(), HEADER.len()),
        None => (line.as_bytes(), 0),
    };
    for (k, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(base + k, format!("byte {b} outside [63,126]")));
        }
    }
    let (n, mut pos) = match bytes.first() {
        None => return Err(err(base, "missing size prefix")),
        Some(&126) => {
            if bytes.get(1) == Some(&126) {
                if bytes.len() < 8 {
                    return Err(err(base + bytes.len(), "truncated 8-byte size prefix"));
                }
                let n = bytes[2..8].iter().fold(0u64, |acc, &b| acc << 6 | (b - 63) as u64);
                (n as usize, 8)
            } else {
                if bytes.len() < 4 {
                    return Err(err(base + bytes.len(), "truncated 4-byte size prefix"));
                }
                let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
                (n, 4)
            }
        }
        Some(&b) => ((b - 63) as usize, 1),
    };
    if n > MAX_VERTICES {
        return Err(err(base, format!("{n} vertices exceeds the limit of {MAX_VERTICES}")));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let payload = &bytes[pos..];
    if payload.len() < need {
        return Err(err(base + bytes.len(), format!("expected {need} payload bytes, found {}", payload.len())));
    }
    if payload.len() > need {
        return Err(err(base + pos + need, "trailing bytes after payload"));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = payload[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = payload[need - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(base + pos + need - 1, "nonzero padding bits"));
        }
    }
    pos += need;
    debug_assert_eq!(pos, bytes.len());
    Ok(g)
}

/// Encodes a graph as graph6, without header or newline.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn smallest_examples() {
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2).unwrap());
        assert_eq!(parse_graph6("D??").unwrap(), Graph::empty(5).unwrap());
        assert_eq!(parse_graph6("?").unwrap(), Graph::empty(0).unwrap());
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap(), Graph::complete(2).unwrap());
        assert_eq!(emit_graph6(&Graph::complete(2).unwrap()), "A_");
    }

    #[test]
    fn known_encodings() {
        // Values from McKay's formats.txt and nauty's geng output.
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g), "DQc");
        assert_eq!(emit_graph6(&Graph::cycle(5).unwrap()), "Dhc");
        assert_eq!(emit_graph6(&Graph::complete(4).unwrap()), "C~");
    }

    #[test]
    fn errors_name_offsets() {
        match parse_graph6("A_x") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("{other:?}"),
        }
        match parse_graph6("D?") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("{other:?}"),
        }
        match parse_graph6("A\u{7f}") {
            Err(Error::Graph6 { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        // n = 2 has one payload bit; the five padding bits must be zero.
        assert!(parse_graph6("A`").is_err());
        assert!(parse_graph6("").is_err());
    }

    #[test]
    fn large_size_prefix() {
        let g = Graph::cycle(64).unwrap();
        let s = emit_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn round_trip_random() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(2024);
        for _ in 0..1000 {
            let n = rng.gen_range(0..=11);
            let mut g = Graph::empty(n).unwrap();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            let s = emit_graph6(&g);
            let back = parse_graph6(&s).unwrap();
            assert_eq!(back, g);
            assert_eq!(emit_graph6(&back), s);
        }
    }
}
