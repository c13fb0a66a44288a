//! Plain-text instance formats.
//!
//! Graphs: a header line `n m` followed by m lines `u v`.
//! 3-uniform hypergraphs: a header line `n m` followed by m lines `a b c`.
//! `#`-prefixed lines and blank lines are skipped; vertex indices are 0-based.
//! Serialization writes edges in sorted order, so parse/serialize round-trips
//! are byte-stable.

use std::fmt::Write as _;

use crate::error::FormatError;
use crate::graph::Graph;
use crate::hypergraph::Hypergraph3;

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines { inner: text.lines().enumerate() }
    }

    /// Next content line as (1-based line number, trimmed text).
    fn next_content(&mut self) -> Option<(usize, &'a str)> {
        for (idx, raw) in self.inner.by_ref() {
            let t = raw.trim();
            if !t.is_empty() && !t.starts_with('#') {
                return Some((idx + 1, t));
            }
        }
        None
    }
}

fn parse_fields<const K: usize>(line: usize, text: &str) -> Result<[usize; K], FormatError> {
    let mut out = [0usize; K];
    let mut fields = text.split_whitespace();
    for slot in out.iter_mut() {
        let f = fields.next().ok_or_else(|| FormatError::Parse {
            line,
            message: format!("expected {K} integers, got \"{text}\""),
        })?;
        *slot = f.parse().map_err(|_| FormatError::Parse {
            line,
            message: format!("\"{f}\" is not a non-negative integer"),
        })?;
    }
    if fields.next().is_some() {
        return Err(FormatError::Parse {
            line,
            message: format!("expected {K} integers, got \"{text}\""),
        });
    }
    Ok(out)
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut lines = Lines::new(text);
    let (hline, header) = lines.next_content().ok_or(FormatError::Parse {
        line: 1,
        message: "missing header line \"n m\"".into(),
    })?;
    let [n, m] = parse_fields(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut last_line = hline;
    for _ in 0..m {
        let (eline, etext) = lines.next_content().ok_or(FormatError::Parse {
            line: last_line,
            message: format!("expected {m} edge lines, found {}", edges.len()),
        })?;
        let [u, v] = parse_fields(eline, etext)?;
        edges.push((u, v));
        last_line = eline;
    }
    if let Some((line, text)) = lines.next_content() {
        return Err(FormatError::Parse {
            line,
            message: format!("unexpected trailing content \"{text}\""),
        });
    }
    Graph::from_edges(n, &edges).map_err(|source| FormatError::Graph { line: last_line, source })
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph3, FormatError> {
    let mut lines = Lines::new(text);
    let (hline, header) = lines.next_content().ok_or(FormatError::Parse {
        line: 1,
        message: "missing header line \"n m\"".into(),
    })?;
    let [n, m] = parse_fields(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut last_line = hline;
    for _ in 0..m {
        let (eline, etext) = lines.next_content().ok_or(FormatError::Parse {
            line: last_line,
            message: format!("expected {m} hyperedge lines, found {}", edges.len()),
        })?;
        edges.push(parse_fields::<3>(eline, etext)?);
        last_line = eline;
    }
    if let Some((line, text)) = lines.next_content() {
        return Err(FormatError::Parse {
            line,
            message: format!("unexpected trailing content \"{text}\""),
        });
    }
    Hypergraph3::from_edges(n, &edges).map_err(|e| FormatError::Parse {
        line: last_line,
        message: e.to_string(),
    })
}

pub fn serialize_hypergraph(hg: &Hypergraph3) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", hg.n(), hg.edge_count()).unwrap();
    for e in hg.edges() {
        writeln!(out, "{} {} {}", e[0], e[1], e[2]).unwrap();
    }
    out
}
