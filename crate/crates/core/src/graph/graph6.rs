//! graph6 encoding: `N(n)` header followed by the upper triangle of the
//! adjacency matrix in column-major order, packed into 6-bit groups offset by 63.

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";
const MAX_N: usize = 68_719_476_735;

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let mut bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let mut base = 0;
    if bytes.starts_with(HEADER.as_bytes()) {
        bytes = &bytes[HEADER.len()..];
        base = HEADER.len();
    }
    let err = |offset: usize, message: String| Error::Parse { offset: base + offset, message };

    if let Some(i) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(i, format!("byte 0x{:02x} outside graph6 range 63..=126", bytes[i])));
    }
    let (n, mut pos) = parse_n(bytes).map_err(|(o, m)| err(o, m))?;

    let pairs = n * n.saturating_sub(1) / 2;
    let need = pairs.div_ceil(6);
    let have = bytes.len() - pos;
    if have < need {
        return Err(err(bytes.len(), format!("truncated payload: expected {need} bytes, found {have}")));
    }
    if have > need {
        return Err(err(pos + need, format!("trailing data: expected {need} payload bytes, found {have}")));
    }

    let mut edges = Vec::new();
    let mut k = 0;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
            if k == pairs {
                break 'outer;
            }
        }
    }
    if pairs % 6 != 0 {
        let last = bytes[pos + need - 1] - 63;
        let pad = 6 - pairs % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(pos + need - 1, "nonzero padding bits".into()));
        }
    }
    pos += need;
    debug_assert_eq!(pos, bytes.len());
    Graph::from_edges(n, edges)
}

fn parse_n(bytes: &[u8]) -> std::result::Result<(usize, usize), (usize, String)> {
    let group = |from: usize, count: usize| -> std::result::Result<usize, (usize, String)> {
        if bytes.len() < from + count {
            return Err((bytes.len(), "truncated vertex-count header".into()));
        }
        Ok(bytes[from..from + count].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize))
    };
    match bytes.first() {
        None => Err((0, "empty input".into())),
        Some(&126) => {
            if bytes.get(1) == Some(&126) {
                Ok((group(2, 6)?, 8))
            } else {
                Ok((group(1, 3)?, 4))
            }
        }
        Some(&b) => Ok(((b - 63) as usize, 1)),
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_N, "graph too large for graph6");
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for s in [12, 6, 0] {
            out.push((n >> s & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for s in [30, 24, 18, 12, 6, 0] {
            out.push((n >> s & 63) as u8 + 63);
        }
    }

    let mut adj = vec![false; n * n];
    for &(u, v) in g.edges() {
        adj[u * n + v] = true;
        adj[v * n + u] = true;
    }
    let mut cur = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            cur = cur << 1 | adj[i * n + j] as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(cur + 63);
                cur = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((cur << (6 - k % 6)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn edge_set(g: &Graph) -> Vec<(usize, usize)> {
        let mut e = g.edges().to_vec();
        e.sort_unstable();
        e
    }

    #[test]
    fn decodes_k4() {
        let g = parse_graph6("C~").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(edge_set(&g), edge_set(&named::complete(4)));
    }

    #[test]
    fn decodes_c5() {
        let g = parse_graph6("Dhc").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(edge_set(&g), vec![(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]);
    }

    #[test]
    fn canonical_round_trip() {
        for s in ["C~", "Dhc", "@", "A_", "A?", "IheA@GUAo"] {
            assert_eq!(to_graph6(&parse_graph6(s).unwrap()), s);
        }
    }

    #[test]
    fn header_and_newline_accepted() {
        let g = parse_graph6(">>graph6<<C~\n").unwrap();
        assert_eq!(g.m(), 6);
    }

    #[test]
    fn long_form_vertex_count() {
        let g = Graph::empty(100);
        let s = to_graph6(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 63 + 1, 63 + 36]);
        assert_eq!(parse_graph6(&s).unwrap().n(), 100);
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(
            parse_graph6("C~ ").unwrap_err(),
            Error::Parse { offset: 2, message: "byte 0x20 outside graph6 range 63..=126".into() }
        );
        assert!(matches!(parse_graph6("D"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse_graph6("C~~"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(parse_graph6(""), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(parse_graph6("~?"), Err(Error::Parse { .. })));
        // n=3 needs 3 bits; low 3 bits of the byte are padding
        assert!(matches!(parse_graph6("BA"), Err(Error::Parse { offset: 1, .. })));
    }
}
