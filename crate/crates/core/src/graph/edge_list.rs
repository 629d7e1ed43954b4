//! Plain-text edge lists: one `u v` pair per line, `#` comments, optional `n m` header.
//!
//! The first line is read as a header when its first number is positive, its
//! second equals the count of remaining edge lines, and every later vertex id
//! is below its first number.

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut rows: Vec<(usize, usize, usize)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let mut next = || -> Result<usize> {
            let tok = tokens
                .next()
                .ok_or_else(|| Error::ParseLine { line: line_no, message: "expected two integers".into() })?;
            tok.parse::<usize>().map_err(|_| Error::ParseLine {
                line: line_no,
                message: format!("`{tok}` is not a non-negative integer"),
            })
        };
        let (a, b) = (next()?, next()?);
        if let Some(extra) = tokens.next() {
            return Err(Error::ParseLine { line: line_no, message: format!("unexpected token `{extra}`") });
        }
        rows.push((line_no, a, b));
    }

    let header = match rows.first() {
        Some(&(_, n, m)) if n > 0 && m == rows.len() - 1 && rows[1..].iter().all(|&(_, u, v)| u < n && v < n) => {
            Some(n)
        }
        _ => None,
    };
    let body = if header.is_some() { &rows[1..] } else { &rows[..] };
    let n = header.unwrap_or_else(|| body.iter().map(|&(_, u, v)| u.max(v) + 1).max().unwrap_or(0));

    let mut seen = std::collections::HashSet::new();
    for &(line, u, v) in body {
        if u == v {
            return Err(Error::ParseLine { line, message: format!("self-loop at vertex {u}") });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::ParseLine { line, message: format!("duplicate edge {u} {v}") });
        }
    }
    Graph::from_edges(n, body.iter().map(|&(_, u, v)| (u, v)))
}

/// Writes `n m` followed by one edge per line, in edge-index order.
pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn path_without_header() {
        let g = parse_edge_list("0 1\n1 2").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn header_sets_vertex_count() {
        let g = parse_edge_list("5 2\n0 1\n1 2\n").unwrap();
        assert_eq!((g.n(), g.m()), (5, 2));
    }

    #[test]
    fn rejects_self_loop_and_duplicates() {
        assert_eq!(
            parse_edge_list("0 0").unwrap_err(),
            Error::ParseLine { line: 1, message: "self-loop at vertex 0".into() }
        );
        assert!(matches!(parse_edge_list("0 1\n0 1"), Err(Error::ParseLine { line: 2, .. })));
        assert!(matches!(parse_edge_list("0 1\n1 0"), Err(Error::ParseLine { line: 2, .. })));
        assert!(matches!(parse_edge_list("0 1\n1 x"), Err(Error::ParseLine { line: 2, .. })));
        assert!(matches!(parse_edge_list("0 1 2"), Err(Error::ParseLine { line: 1, .. })));
        assert!(matches!(parse_edge_list("0 -1"), Err(Error::ParseLine { line: 1, .. })));
    }

    #[test]
    fn comments_and_round_trip() {
        let g = parse_edge_list("# petersen-ish\n0 1 # first\n\n1 2\n").unwrap();
        assert_eq!(g.m(), 2);
        let p = named::petersen();
        assert_eq!(parse_edge_list(&to_edge_list(&p)).unwrap(), p);
    }
}
