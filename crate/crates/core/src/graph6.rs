//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix, column by column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`),
//! packed six bits per byte, big-endian, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const OFFSET: u8 = 63;

fn bad(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses one graph6 line. A single trailing `\n` or `\r\n` is tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text
        .strip_suffix('\n')
        .map(|s| s.strip_suffix('\r').unwrap_or(s))
        .unwrap_or(text);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(bad(0, "empty input"));
    }
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(bad(pos, format!("byte {:#04x} outside 63..=126", bytes[pos])));
    }

    let (n, header) = if bytes[0] != 126 {
        ((bytes[0] - OFFSET) as usize, 1)
    } else {
        if bytes.len() < 4 {
            return Err(bad(bytes.len(), "truncated size header"));
        }
        if bytes[1] == 126 {
            return Err(bad(1, "8-byte size header exceeds supported order"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - OFFSET) as usize);
        if n < 63 {
            return Err(bad(1, format!("non-canonical long header for n={n}")));
        }
        (n, 4)
    };
    if n == 0 {
        return Err(bad(0, "zero-vertex graph"));
    }
    if n > MAX_VERTICES {
        return Err(bad(0, format!("order {n} exceeds {MAX_VERTICES}")));
    }

    let need = data_len(n);
    let data = &bytes[header..];
    if data.len() < need {
        return Err(bad(bytes.len(), format!("expected {need} edge bytes, found {}", data.len())));
    }
    if data.len() > need {
        return Err(bad(header + need, "trailing bytes after edge data"));
    }

    let mut g = Graph::empty(n)?;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - OFFSET;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    // padding bits in the final byte must be zero
    if k % 6 != 0 {
        let last = data[need - 1] - OFFSET;
        let pad_mask = (1u8 << (6 - k % 6)) - 1;
        if last & pad_mask != 0 {
            return Err(bad(header + need - 1, "non-zero padding bits"));
        }
    }
    Ok(g)
}

/// Encodes `g` as a graph6 line, without a trailing newline.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + data_len(n));
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + OFFSET);
        }
    }
    out.extend(pack_upper_triangle(g).into_iter().map(|b| b + OFFSET));
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Upper-triangle bits in graph6 order, six per byte, without the offset.
pub(crate) fn pack_upper_triangle(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut data = vec![0u8; data_len(n)];
    let mut k = 0usize;
    for j in 1..n {
        let row = g.row(j);
        for i in 0..j {
            if row >> i & 1 == 1 {
                data[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    data
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex() {
        let g = Graph::empty(1).unwrap();
        assert_eq!(emit_graph6(&g), "@");
        assert_eq!(parse_graph6("@").unwrap().n(), 1);
    }

    #[test]
    fn k4_by_hand() {
        // 6 bits, all set: 63 + 63 = 126 = '~'; header 4 + 63 = 'C'
        let g = parse_graph6("C~").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.degree_sequence().to_string(), "3-3-3-3");
        assert_eq!(emit_graph6(&Graph::complete(4).unwrap()), "C~");
    }

    #[test]
    fn known_small_encodings() {
        // path 0-1-2: bits x01=1 x02=0 x12=1 -> 101000 = 40 -> 'g'
        assert_eq!(emit_graph6(&Graph::path(3).unwrap()), "Bg");
        // triangle: 111000 = 56 -> 'w'
        let c3 = Graph::cycle(3).unwrap();
        assert_eq!(emit_graph6(&c3), "Bw");
        let back = parse_graph6("Bw").unwrap();
        assert_eq!(back, c3);
        // empty graph on 5 vertices: header 'D' plus two zero bytes
        assert_eq!(emit_graph6(&Graph::empty(5).unwrap()), "D??");
        // the string petgraph uses for its 5-vertex example
        let g = Graph::new(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&g), "DQc");
    }

    #[test]
    fn long_header() {
        let g = Graph::cycle(64).unwrap();
        let s = emit_graph6(&g);
        assert!(s.starts_with("~?@?"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn errors_carry_offsets() {
        let err = |s: &str| match parse_graph6(s) {
            Err(Error::Graph6 { offset, .. }) => offset,
            other => panic!("expected parse error for {s:?}, got {other:?}"),
        };
        assert_eq!(err(""), 0);
        assert_eq!(err("C"), 1);
        assert_eq!(err("C~~"), 2);
        assert_eq!(err("C~ "), 2);
        assert_eq!(err("Bx"), 1); // padding bit set
        assert_eq!(err("?"), 0);
    }

    #[test]
    fn tolerates_line_ending() {
        assert_eq!(parse_graph6("C~\n").unwrap().edge_count(), 6);
        assert_eq!(parse_graph6("C~\r\n").unwrap().edge_count(), 6);
    }
}
