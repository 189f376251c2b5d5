//! Text formats for graphs: a plain edge list and graph6.
//!
//! Edge list: UTF-8 lines `u v` with 0-based indices; `#` starts a comment
//! and blank lines are ignored. The vertex count is one more than the largest
//! index, unless a `# vertices N` comment raises it (this is how isolated
//! trailing vertices survive a round trip).
//!
//! graph6: the standard encoding, one graph per line, optional `>>graph6<<`
//! header.

use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edge-list" | "edgelist" => Ok(GraphFormat::EdgeList),
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("byte {offset}: {message}")]
    Offset { offset: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, ParseError> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => {
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .ok_or_else(|| ParseError::Offset {
                    offset: 0,
                    message: "no graph6 line".into(),
                })?;
            parse_graph6(line)
        }
    }
}

pub fn emit_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => emit_edge_list(g),
        GraphFormat::Graph6 => {
            let mut s = emit_graph6(g);
            s.push('\n');
            s
        }
    }
}

fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut n = 0usize;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let err = |message: String| ParseError::Line {
            line: line_no,
            message,
        };
        let (content, comment) = match raw.split_once('#') {
            Some((c, rest)) => (c, Some(rest)),
            None => (raw, None),
        };
        if let Some(rest) = comment {
            let mut words = rest.split_whitespace();
            if words.next() == Some("vertices") {
                let count = words
                    .next()
                    .and_then(|w| w.parse::<usize>().ok())
                    .ok_or_else(|| err("malformed `# vertices N` directive".into()))?;
                n = n.max(count);
            }
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            [a, b] => {
                let parse = |t: &str| {
                    t.parse::<usize>()
                        .map_err(|_| err(format!("`{t}` is not a vertex index")))
                };
                let (a, b) = (parse(a)?, parse(b)?);
                n = n.max(a + 1).max(b + 1);
                edges.push((a, b));
            }
            _ => return Err(err(format!("expected `u v`, found `{}`", content.trim()))),
        }
    }
    Ok(Graph::new(n, edges)?)
}

fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("# vertices {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn graph6_size_bytes(n: usize) -> Vec<u8> {
    if n <= 62 {
        vec![n as u8 + 63]
    } else if n <= 258_047 {
        vec![126, (n >> 12 & 63) as u8 + 63, (n >> 6 & 63) as u8 + 63, (n & 63) as u8 + 63]
    } else {
        let mut out = vec![126, 126];
        out.extend((0..6).rev().map(|i| (n >> (6 * i) & 63) as u8 + 63));
        out
    }
}

pub fn emit_graph6(g: &Graph) -> String {
    let mut bytes = graph6_size_bytes(g.n());
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..g.n() {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                bytes.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

pub fn parse_graph6(line: &str) -> Result<Graph, ParseError> {
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    let bad = |offset: usize, message: &str| ParseError::Offset {
        offset,
        message: message.to_string(),
    };
    let sextet = |i: usize| -> Result<usize, ParseError> {
        match bytes.get(i) {
            Some(&b) if (63..=126).contains(&b) => Ok(usize::from(b - 63)),
            Some(_) => Err(bad(i, "byte outside the graph6 range 63..=126")),
            None => Err(bad(i, "truncated input")),
        }
    };
    let (n, mut pos) = if bytes.first() != Some(&126) {
        (sextet(0)?, 1)
    } else if bytes.get(1) != Some(&126) {
        ((1..4).try_fold(0, |acc, i| Ok::<_, ParseError>(acc << 6 | sextet(i)?))?, 4)
    } else {
        ((2..8).try_fold(0, |acc, i| Ok::<_, ParseError>(acc << 6 | sextet(i)?))?, 8)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = pos + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(bad(
            bytes.len().min(expected),
            &format!("expected {expected} bytes for {n} vertices, found {}", bytes.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    let mut current = 0;
    for j in 1..n {
        for i in 0..j {
            if k % 6 == 0 {
                current = sextet(pos)?;
                pos += 1;
            }
            if current >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::new(n, edges)?)
}
