//! graph6 encoding.
//!
//! The vertex count is written in the usual 1/4/8-byte form and the upper
//! triangle of the adjacency matrix follows column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`), six bits per printable byte
//! offset by 63, big-endian within each byte. The `>>graph6<<` header is
//! accepted on input and never written.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order this implementation reads or writes (the 4-byte size form).
pub const MAX_ORDER: usize = 258_047;

const HEADER: &str = ">>graph6<<";

fn parse_err(offset: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        msg: msg.into(),
    }
}

/// Decodes one graph6 line. A single trailing `\n` or `\r\n` is ignored.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let (base, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(base + i, format!("byte 0x{b:02x} outside graph6 range")));
        }
    }
    let sixes = |from: usize, count: usize| -> Result<u64> {
        if body.len() < from + count {
            return Err(parse_err(base + body.len(), "truncated vertex count"));
        }
        Ok(body[from..from + count]
            .iter()
            .fold(0u64, |acc, &b| (acc << 6) | u64::from(b - 63)))
    };
    let (n, mut pos) = match body.first() {
        None => return Err(parse_err(base, "empty input")),
        Some(&126) if body.get(1) == Some(&126) => (sixes(2, 6)?, 8),
        Some(&126) => (sixes(1, 3)?, 4),
        Some(&b) => (u64::from(b - 63), 1),
    };
    if n > MAX_ORDER as u64 {
        return Err(Error::Unsupported(format!("order {n} exceeds {MAX_ORDER}")));
    }
    let n = n as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() - pos != need {
        let at = base + pos + need.min(body.len() - pos);
        return Err(parse_err(
            at,
            format!("expected {need} adjacency bytes, found {}", body.len() - pos),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[pos + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    pos += need;
    debug_assert_eq!(pos, body.len());
    edges.sort_unstable();
    Ok(Graph::from_sorted_edges(n, edges))
}

/// Headerless canonical encoding, without a line terminator.
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Error::Unsupported(format!("order {n} exceeds {MAX_ORDER}")));
    }
    let mut out = Vec::with_capacity(4 + n * n / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.adjacent(i, j));
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
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Reads every non-empty line of a graph6 file.
pub fn read_graph6_file(text: &str) -> Result<Vec<Graph>> {
    text.lines().filter(|l| !l.trim().is_empty()).map(from_graph6).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn k4_both_ways() {
        let k4 = from_graph6("C~").unwrap();
        assert_eq!(k4, Graph::complete(4));
        assert_eq!(to_graph6(&k4).unwrap(), "C~");
    }

    #[test]
    fn tiny_orders() {
        let one = from_graph6("@").unwrap();
        assert_eq!((one.order(), one.size()), (1, 0));
        assert_eq!(to_graph6(&Graph::complete(0)).unwrap(), "?");
        assert_eq!(from_graph6("?").unwrap().order(), 0);
    }

    #[test]
    fn header_and_newline_accepted() {
        assert_eq!(from_graph6(">>graph6<<C~\n").unwrap(), Graph::complete(4));
    }

    #[test]
    fn trailing_data_rejected() {
        match from_graph6("C~x") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn bad_byte_reports_offset() {
        match from_graph6("C\u{7}") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("unexpected {other:?}"),
        }
        assert!(from_graph6("").is_err());
        assert!(from_graph6("C").is_err());
    }

    #[test]
    fn petersen_known_encoding() {
        // Standard nauty labeling of the Petersen graph.
        let g = from_graph6("IheA@GUAo").unwrap();
        assert_eq!(g.order(), 10);
        assert_eq!(g.size(), 15);
        assert_eq!(g.recognize_srg(), Some(crate::graph::SrgParams::new(10, 3, 0, 1)));
    }

    #[test]
    fn four_byte_size_form() {
        let g = Graph::cycle(100);
        let s = to_graph6(&g).unwrap();
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 63 + 36]);
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    proptest! {
        #[test]
        fn round_trip(n in 0usize..=64, seed in any::<u64>()) {
            let mut x = seed | 1;
            let g = Graph::from_fn(n, |_, _| {
                x ^= x << 13; x ^= x >> 7; x ^= x << 17;
                x & 1 == 1
            });
            let s = to_graph6(&g).unwrap();
            prop_assert_eq!(from_graph6(&s).unwrap(), g);
        }
    }
}
