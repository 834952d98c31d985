//! Plain-text graph input.
//!
//! ```text
//! n=4          # header, then one "i j" line per edge (1-based)
//! 3 4
//! 1 4
//! 1 2
//! ```
//!
//! or a single `path: 3 4 1 2` line, or a single `star: n=5 center=3` line.
//! `#` starts a comment; blank lines are ignored.

use super::LabeledGraph;
use crate::error::{Error, Result};

pub fn parse_graph(input: &str) -> Result<LabeledGraph> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (lineno, first) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "empty input".into(),
    })?;

    let graph = if let Some(rest) = first.strip_prefix("path:") {
        let labels = rest
            .split_whitespace()
            .map(|t| parse_usize(t, lineno))
            .collect::<Result<Vec<_>>>()?;
        LabeledGraph::path(&labels)?
    } else if let Some(rest) = first.strip_prefix("star:") {
        let mut n = None;
        let mut center = None;
        for token in rest.split_whitespace() {
            match token.split_once('=') {
                Some(("n", v)) => n = Some(parse_usize(v, lineno)?),
                Some(("center", v)) => center = Some(parse_usize(v, lineno)?),
                _ => return Err(parse_error(lineno, format!("unexpected token {token:?}"))),
            }
        }
        let n = n.ok_or_else(|| parse_error(lineno, "star needs n=<int>".into()))?;
        let center = center.ok_or_else(|| parse_error(lineno, "star needs center=<int>".into()))?;
        LabeledGraph::star(n, center)?
    } else if let Some(v) = first.strip_prefix("n=") {
        let n = parse_usize(v.trim(), lineno)?;
        let mut edges = Vec::new();
        for (lineno, line) in lines.by_ref() {
            let mut parts = line.split_whitespace();
            let (Some(i), Some(j), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(parse_error(lineno, format!("expected \"<i> <j>\", got {line:?}")));
            };
            edges.push((parse_usize(i, lineno)?, parse_usize(j, lineno)?));
        }
        LabeledGraph::new(n, edges)?
    } else {
        return Err(parse_error(
            lineno,
            format!("expected \"n=<int>\", \"path:\" or \"star:\", got {first:?}"),
        ));
    };

    if let Some((lineno, line)) = lines.next() {
        return Err(parse_error(lineno, format!("trailing input {line:?}")));
    }
    Ok(graph)
}

fn parse_usize(token: &str, line: usize) -> Result<usize> {
    token
        .parse()
        .map_err(|_| parse_error(line, format!("expected a positive integer, got {token:?}")))
}

fn parse_error(line: usize, message: String) -> Error {
    Error::Parse { line, message }
}
