//! Edge-list and graph6 readers and writers.
//!
//! Edge lists are plain text: a header line `n m` followed by `m` lines
//! `u v` with 0-based vertices. Blank lines and lines starting with `#` are
//! ignored. graph6 is the usual format of McKay's nauty tools.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use containment_core::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

fn parse_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse { line, message: message.into() }
}

pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let nums: Vec<&str> = header.split_whitespace().collect();
    if nums.len() != 2 {
        return Err(parse_err(hline, "header must be `n m`"));
    }
    let n: usize = nums[0].parse().map_err(|_| parse_err(hline, "bad vertex count"))?;
    let m: usize = nums[1].parse().map_err(|_| parse_err(hline, "bad edge count"))?;
    let mut edges = Vec::with_capacity(m);
    let mut last_line = hline;
    for (ln, l) in lines {
        let parts: Vec<&str> = l.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(parse_err(ln, "edge line must be `u v`"));
        }
        let u: usize = parts[0].parse().map_err(|_| parse_err(ln, "bad vertex"))?;
        let v: usize = parts[1].parse().map_err(|_| parse_err(ln, "bad vertex"))?;
        let bad = if u == v {
            Some(GraphError::Loop(u))
        } else {
            [u, v].into_iter().find(|&x| x >= n).map(|vertex| GraphError::VertexOutOfRange { vertex, n })
        };
        if let Some(source) = bad {
            return Err(FormatError::Graph { line: ln, source });
        }
        edges.push((u, v));
        last_line = ln;
    }
    if edges.len() != m {
        return Err(parse_err(last_line, format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, &edges).map_err(|source| {
        let line = match source {
            GraphError::Duplicate(u, v) => duplicate_line(text, u, v).unwrap_or(last_line),
            _ => last_line,
        };
        FormatError::Graph { line, source }
    })
}

/// Line of the second occurrence of edge `uv`.
fn duplicate_line(text: &str, u: usize, v: usize) -> Option<usize> {
    let mut seen = 0;
    for (i, l) in text.lines().enumerate().skip(1) {
        let p: Vec<usize> = l.split_whitespace().filter_map(|x| x.parse().ok()).collect();
        if p.len() == 2 && ((p[0] == u && p[1] == v) || (p[0] == v && p[1] == u)) {
            seen += 1;
            if seen == 2 {
                return Some(i + 1);
            }
        }
    }
    None
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for [u, v] in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn read_graph(path: &Path) -> Result<Graph, FormatError> {
    let text =
        fs::read_to_string(path).map_err(|source| FormatError::Io { path: path.display().to_string(), source })?;
    let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    if path.extension().is_some_and(|e| e == "g6") || first.starts_with(">>graph6<<") {
        let mut graphs = parse_graph6_list(&text)?;
        if graphs.len() != 1 {
            return Err(parse_err(1, format!("expected one graph, found {}", graphs.len())));
        }
        Ok(graphs.remove(0))
    } else {
        parse_edge_list(&text)
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n < 63 {
        out.push((n as u8 + 63) as char);
    } else if n < 258_048 {
        out.push(126 as char);
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    } else {
        out.push(126 as char);
        out.push(126 as char);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    let mut word = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            word = (word << 1) | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push((word + 63) as char);
                word = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push(((word << (6 - bits)) + 63) as char);
    }
    out
}

pub fn parse_graph6(s: &str) -> Result<Graph, String> {
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes: Vec<u8> = s.bytes().collect();
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err("byte outside the graph6 range".into());
    }
    let six = |b: u8| (b - 63) as usize;
    let (n, mut pos) = match bytes.as_slice() {
        [] => return Err("empty graph6 string".into()),
        [126, 126, rest @ ..] if rest.len() >= 6 => (rest[..6].iter().fold(0, |acc, &b| (acc << 6) | six(b)), 8),
        [126, rest @ ..] if rest.len() >= 3 => (rest[..3].iter().fold(0, |acc, &b| (acc << 6) | six(b)), 4),
        [126, ..] => return Err("truncated vertex count".into()),
        [b, ..] => (six(*b), 1),
    };
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if bytes.len() - pos != needed {
        return Err(format!("expected {needed} data bytes for n = {n}, found {}", bytes.len() - pos));
    }
    let mut edges = Vec::new();
    let mut bit = 6;
    let mut word = 0;
    for j in 1..n {
        for i in 0..j {
            if bit == 6 {
                word = six(bytes[pos]);
                pos += 1;
                bit = 0;
            }
            if word >> (5 - bit) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, &edges).map_err(|e| e.to_string())
}

/// One graph6 string per non-empty line.
pub fn parse_graph6_list(text: &str) -> Result<Vec<Graph>, FormatError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6(l.trim()).map_err(|m| parse_err(i + 1, m)))
        .collect()
}

pub fn read_graph6_file(path: &Path) -> Result<Vec<Graph>, FormatError> {
    let text =
        fs::read_to_string(path).map_err(|source| FormatError::Io { path: path.display().to_string(), source })?;
    parse_graph6_list(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::petersen();
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_errors_carry_lines() {
        let err = parse_edge_list("3 2\n0 1\n1 1\n").unwrap_err();
        assert!(matches!(err, FormatError::Graph { line: 3, source: GraphError::Loop(1) }), "{err}");
        let err = parse_edge_list("3 2\n0 1\n1 0\n").unwrap_err();
        assert!(matches!(err, FormatError::Graph { line: 3, .. }), "{err}");
        let err = parse_edge_list("3 2\n0 1\n").unwrap_err();
        assert!(matches!(err, FormatError::Parse { line: 2, .. }), "{err}");
        let err = parse_edge_list("3\n").unwrap_err();
        assert!(matches!(err, FormatError::Parse { line: 1, .. }));
        let err = parse_edge_list("# c\n3 1\n0 7\n").unwrap_err();
        assert!(matches!(err, FormatError::Graph { line: 3, .. }), "{err}");
    }

    #[test]
    fn graph6_known_strings() {
        // Reference encodings from the nauty documentation and tools.
        assert_eq!(to_graph6(&Graph::complete(4)), "C~");
        assert_eq!(to_graph6(&Graph::path(2)), "A_");
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        assert_eq!(to_graph6(&Graph::petersen()).len(), 1 + 45usize.div_ceil(6));
        let g = parse_graph6("DQc").unwrap();
        assert_eq!(g.edges(), &[[0, 2], [1, 3], [0, 4], [3, 4]]);
    }

    #[test]
    fn graph6_round_trip_large() {
        let g = Graph::cycle(100);
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        let back = parse_graph6(&s).unwrap();
        assert_eq!((back.n(), back.m()), (100, 100));
        assert_eq!(to_graph6(&back), s);
        assert!(back.has_edge(0, 99));
    }

    #[test]
    fn graph6_rejects_garbage() {
        assert!(parse_graph6("C").is_err());
        assert!(parse_graph6("C~~").is_err());
        assert!(parse_graph6("C \x01").is_err());
    }
}
