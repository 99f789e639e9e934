//! Plain-text edge lists: an `n=<N>` header, then one 0-based `i j` pair
//! per line. Blank lines and `#` comments are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut order = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::EdgeList { line: line_no, msg };
        if let Some(rest) = line.strip_prefix("n=").or_else(|| line.strip_prefix("n =")) {
            if order.is_some() {
                return Err(err("duplicate n= header".into()));
            }
            let n: usize = rest
                .trim()
                .parse()
                .map_err(|_| err(format!("bad order {rest:?}")))?;
            order = Some(n);
            continue;
        }
        if order.is_none() {
            return Err(err("edge before the n= header".into()));
        }
        let mut parts = line.split_whitespace();
        let mut vertex = || -> Result<usize> {
            let tok = parts
                .next()
                .ok_or_else(|| err("expected two vertices".into()))?;
            tok.parse().map_err(|_| err(format!("bad vertex {tok:?}")))
        };
        let (i, j) = (vertex()?, vertex()?);
        if parts.next().is_some() {
            return Err(err("trailing tokens after edge".into()));
        }
        edges.push((line_no, i, j));
    }
    let n = order.ok_or(Error::EdgeList {
        line: 0,
        msg: "missing n= header".into(),
    })?;
    let mut g = Graph::empty(n)?;
    for (line, i, j) in edges {
        g = g.add_edge(i, j).map_err(|e| Error::EdgeList {
            line,
            msg: e.to_string(),
        })?;
    }
    Ok(g)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("n={}\n", g.order());
    for (i, j) in g.edges() {
        let _ = writeln!(out, "{i} {j}");
    }
    out
}

/// True if the text looks like an edge list rather than graph6.
pub fn looks_like_edge_list(text: &str) -> bool {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.starts_with("n=") || l.starts_with("n ="))
        || text.trim_start().starts_with('#')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_with_comments() {
        let text = "# triangle with a tail\nn=4\n\n0 1\n1 2 # closing soon\n2 0\n2 3\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.size(), 4);
        assert_eq!(parse_edge_list(&emit_edge_list(&g)).unwrap(), g);
        assert!(looks_like_edge_list(text));
        assert!(!looks_like_edge_list("Bw\n"));
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert!(matches!(
            parse_edge_list("0 1\n"),
            Err(Error::EdgeList { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("n=3\n0 1\n0 1\n"),
            Err(Error::EdgeList { line: 3, .. })
        ));
        assert!(matches!(
            parse_edge_list("n=3\n0 3\n"),
            Err(Error::EdgeList { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("n=3\n0\n"),
            Err(Error::EdgeList { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("n=3\n0 1 2\n"),
            Err(Error::EdgeList { line: 2, .. })
        ));
        assert!(parse_edge_list("# nothing\n").is_err());
        assert!(parse_edge_list("n=65\n").is_err());
    }
}
