//! Plain-text digraph format.
//!
//! ```text
//! n m
//! u v      (m lines, 0-indexed arc u -> v)
//! ```
//!
//! Blank lines are ignored. `write_digraph` emits arcs in lexicographic
//! order, so `read_digraph(write_digraph(d)) == d`.

use std::fmt::Write as _;

use thiserror::Error;

use crate::digraph::Digraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize), ParseError> {
    let mut fields = text.split_whitespace();
    let mut next = |what: &str| -> Result<usize, ParseError> {
        let tok = fields
            .next()
            .ok_or_else(|| err(line, format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| err(line, format!("invalid {what} {tok:?}")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if let Some(extra) = fields.next() {
        return Err(err(line, format!("unexpected token {extra:?}")));
    }
    Ok((a, b))
}

pub fn read_digraph(text: &str) -> Result<Digraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing header \"n m\""))?;
    let (n, m) = parse_pair(header_line, header)?;

    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut inn: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut seen = std::collections::HashSet::with_capacity(m);
    let mut last_line = header_line;
    for _ in 0..m {
        let (line, text) = lines
            .next()
            .ok_or_else(|| err(last_line + 1, format!("expected {m} arcs")))?;
        last_line = line;
        let (u, v) = parse_pair(line, text)?;
        if u >= n || v >= n {
            return Err(err(line, format!("vertex index out of range for n = {n}")));
        }
        if u == v {
            return Err(err(line, format!("loop at vertex {u}")));
        }
        if !seen.insert((u, v)) {
            return Err(err(line, format!("duplicate arc {u} {v}")));
        }
        out[u].push(v);
        inn[v].push(u);
    }
    if let Some((line, _)) = lines.next() {
        return Err(err(line, format!("more than {m} arcs")));
    }
    for list in out.iter_mut().chain(inn.iter_mut()) {
        list.sort_unstable();
    }
    Ok(Digraph::from_sorted_adjacency(out, inn))
}

pub fn write_digraph(d: &Digraph) -> String {
    let mut s = String::new();
    writeln!(s, "{} {}", d.vertex_count(), d.arc_count()).unwrap();
    for (u, v) in d.arcs() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}
