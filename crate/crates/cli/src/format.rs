//! Text formats: edge lists, partition lines and `v ω(v)` weight files.

use ifd_core::partition::Side;
use ifd_core::{Graph, GraphError, Partition};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("ParseError: line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Graph(#[from] GraphError),
}

fn parse_err(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Parse { line, msg: msg.into() }
}

/// Non-comment lines with their 1-based line numbers.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.starts_with('#') && !l.trim().is_empty())
}

fn two_numbers(line: usize, s: &str) -> Result<(usize, usize), FormatError> {
    let mut it = s.split_whitespace();
    let mut next = || -> Result<usize, FormatError> {
        let tok = it.next().ok_or_else(|| parse_err(line, "expected two integers"))?;
        tok.parse().map_err(|_| parse_err(line, format!("not a non-negative integer: {tok:?}")))
    };
    let pair = (next()?, next()?);
    if it.next().is_some() {
        return Err(parse_err(line, "trailing tokens"));
    }
    Ok(pair)
}

/// Parses the edge-list format: `#` comment lines, an `n m` header, then
/// `m` lines `u v` with `u < v < n`.
pub fn load_graph(text: &str) -> Result<Graph, FormatError> {
    let mut lines = data_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let (n, m) = two_numbers(hl, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, s) in lines.by_ref() {
        let (u, v) = two_numbers(line, s)?;
        if u == v {
            return Err(GraphError::Loop(u).into());
        }
        if v >= n || u >= n {
            return Err(parse_err(line, format!("vertex out of range 0..{n}")));
        }
        if u > v {
            return Err(parse_err(line, "edge endpoints must be listed as u < v"));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(hl, format!("header announces {m} edges, found {}", edges.len())));
    }
    Ok(Graph::from_edges(n, &edges)?)
}

/// Writes the canonical edge list: header, then edges in lexicographic order.
pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// Parses a single line of `I`/`F` characters.
pub fn parse_partition(text: &str) -> Result<Partition, FormatError> {
    let mut lines = data_lines(text);
    let Some((line, s)) = lines.next() else {
        // the empty graph has the empty partition
        return Ok(Partition::new(Vec::new()));
    };
    if lines.next().is_some() {
        return Err(parse_err(line + 1, "partition must be a single line"));
    }
    let sides = s
        .trim()
        .chars()
        .map(|c| match c {
            'I' => Ok(Side::I),
            'F' => Ok(Side::F),
            _ => Err(parse_err(line, format!("unexpected character {c:?}"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Partition::new(sides))
}

pub fn write_partition(p: &Partition) -> String {
    format!("{p}\n")
}

/// Parses `v ω(v)` lines; unlisted vertices get weight 0.
pub fn parse_omega(text: &str, n: usize) -> Result<Vec<usize>, FormatError> {
    let mut omega = vec![0; n];
    let mut seen = vec![false; n];
    for (line, s) in data_lines(text) {
        let (v, w) = two_numbers(line, s)?;
        if v >= n {
            return Err(parse_err(line, format!("vertex out of range 0..{n}")));
        }
        if seen[v] {
            return Err(parse_err(line, format!("vertex {v} listed twice")));
        }
        seen[v] = true;
        omega[v] = w;
    }
    Ok(omega)
}
