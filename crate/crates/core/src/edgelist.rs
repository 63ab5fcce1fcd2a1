//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! n m
//! u v      (m lines, 0-based)
//! ```
//!
//! `#` starts a comment anywhere on a line; tokens are whitespace separated.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parses the edge-list format. The declared edge count must match the
/// number of pair lines; repeated pairs collapse in the resulting graph.
pub fn parse(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.split('#').next().unwrap_or("").trim()))
        .filter(|(_, line)| !line.is_empty());

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| Error::input("empty edge list: expected header `n m`"))?;
    let [n, m] = parse_pair(header_line, header)?;

    let mut pairs = Vec::with_capacity(m);
    for (lineno, line) in lines {
        pairs.push(parse_pair(lineno, line)?);
    }
    if pairs.len() != m {
        return Err(Error::input(format!(
            "header declares {m} edges but {} were listed",
            pairs.len()
        )));
    }
    Graph::from_edge_list(n, pairs.into_iter().map(|[u, v]| (u, v)))
}

fn parse_pair(lineno: usize, line: &str) -> Result<[usize; 2]> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    if tokens.len() != 2 {
        return Err(Error::input(format!(
            "line {lineno}: expected two integers, found `{line}`"
        )));
    }
    let mut out = [0usize; 2];
    for (slot, tok) in out.iter_mut().zip(&tokens) {
        *slot = tok.parse().map_err(|_| {
            Error::input(format!(
                "line {lineno}: `{tok}` is not a non-negative integer"
            ))
        })?;
    }
    Ok(out)
}

/// Serialises `g` in canonical edge order, preceded by `comments` as `#` lines.
pub fn format(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.u(), e.v());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let text = "# K3 + e\n4 4  # header\n0 1\n1 2\n\n2 0\n0 3 # pendant\n";
        let g = parse(text).unwrap();
        assert_eq!(
            g,
            Graph::from_edge_list(4, [(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap()
        );
    }

    #[test]
    fn round_trips() {
        let g = Graph::cycle(5).unwrap();
        let text = format(&g, &["c5".to_string()]);
        assert!(text.starts_with("# c5\n5 5\n"));
        assert_eq!(parse(&text).unwrap(), g);
    }

    #[test]
    fn empty_graph_has_header_only() {
        let g = parse("3 0\n").unwrap();
        assert_eq!((g.n(), g.m()), (3, 0));
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in [
            "",
            "# only comment",
            "3",
            "3 1\n0",
            "3 1\n0 x",
            "3 2\n0 1",
            "2 1\n0 2",
            "2 1\n1 1",
            "-1 0",
        ] {
            assert!(
                matches!(parse(bad), Err(Error::Input(_))),
                "accepted {bad:?}"
            );
        }
    }
}
