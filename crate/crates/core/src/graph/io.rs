//! Line-oriented DIMACS `.col` and plain edge-list formats.

use std::fmt::Write;

use serde::Serialize;

use super::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum InputFormat {
    /// `p edge N M` header, 1-based `e u v` lines.
    Dimacs,
    /// 0-based `u v` lines with an optional leading `n <count>`.
    EdgeList,
}

impl InputFormat {
    /// Offset from internal 0-based indices to the labels used in the file.
    pub fn label_offset(self) -> usize {
        match self {
            InputFormat::Dimacs => 1,
            InputFormat::EdgeList => 0,
        }
    }
}

fn malformed(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Malformed {
        line,
        message: message.into(),
    }
}

fn parse_number(line: usize, token: Option<&str>, what: &str) -> Result<u64, GraphError> {
    let token = token.ok_or_else(|| malformed(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| malformed(line, format!("expected integer {what}, found `{token}`")))
}

pub fn parse_dimacs(text: &str) -> Result<Graph, GraphError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut tokens = raw.split_whitespace();
        match tokens.next() {
            None | Some("c") => continue,
            Some("p") => {
                if n.is_some() {
                    return Err(GraphError::DuplicateProblemLine { line });
                }
                match tokens.next() {
                    Some("edge") | Some("col") => {}
                    other => {
                        return Err(malformed(
                            line,
                            format!("expected `p edge`, found format {:?}", other.unwrap_or("")),
                        ))
                    }
                }
                let count = parse_number(line, tokens.next(), "vertex count")?;
                parse_number(line, tokens.next(), "edge count")?;
                if count == 0 {
                    return Err(GraphError::Empty);
                }
                n = Some(count as usize);
            }
            Some("e") => {
                let n = n.ok_or(GraphError::MissingProblemLine { line })?;
                let u = parse_number(line, tokens.next(), "endpoint")?;
                let v = parse_number(line, tokens.next(), "endpoint")?;
                for w in [u, v] {
                    if w == 0 || w > n as u64 {
                        return Err(GraphError::EdgeOutOfRange { line, vertex: w, n });
                    }
                }
                if u == v {
                    return Err(GraphError::SelfLoopLine { line, vertex: u });
                }
                edges.push((u as usize - 1, v as usize - 1));
            }
            Some(other) => return Err(malformed(line, format!("unknown line type `{other}`"))),
        }
        if let Some(extra) = tokens.next() {
            return Err(malformed(line, format!("unexpected token `{extra}`")));
        }
    }
    let n = n.ok_or(GraphError::NoProblemLine)?;
    Graph::new(n, edges)
}

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut declared: Option<(usize, usize)> = None;
    let mut seen_content = false;
    let mut edges = Vec::new();
    let mut max_vertex: Option<(usize, u64)> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("");
        let mut tokens = body.split_whitespace();
        let Some(first) = tokens.next() else { continue };
        if first == "n" && !seen_content {
            let count = parse_number(line, tokens.next(), "vertex count")?;
            declared = Some((line, count as usize));
        } else {
            let u = parse_number(line, Some(first), "vertex")?;
            let v = parse_number(line, tokens.next(), "vertex")?;
            if u == v {
                return Err(GraphError::SelfLoopLine { line, vertex: u });
            }
            let hi = u.max(v);
            if max_vertex.is_none_or(|(_, m)| hi > m) {
                max_vertex = Some((line, hi));
            }
            edges.push((u as usize, v as usize));
        }
        seen_content = true;
        if let Some(extra) = tokens.next() {
            return Err(malformed(line, format!("unexpected token `{extra}`")));
        }
    }
    let required = max_vertex.map_or(0, |(_, m)| m as usize + 1);
    let n = match declared {
        Some((line, count)) if count < required => {
            return Err(GraphError::DeclaredTooSmall {
                line,
                declared: count,
                required,
            })
        }
        Some((_, count)) => count,
        None => required,
    };
    Graph::new(n, edges)
}

/// A leading `p` line (after `c` comments) marks DIMACS; anything else is an edge list.
pub fn detect_format(text: &str) -> InputFormat {
    let first = text
        .lines()
        .filter_map(|l| l.split_whitespace().next())
        .find(|&token| token != "c");
    match first {
        Some("p") => InputFormat::Dimacs,
        _ => InputFormat::EdgeList,
    }
}

pub fn parse_auto(text: &str) -> Result<(Graph, InputFormat), GraphError> {
    let format = detect_format(text);
    let graph = match format {
        InputFormat::Dimacs => parse_dimacs(text)?,
        InputFormat::EdgeList => parse_edge_list(text)?,
    };
    Ok((graph, format))
}

pub fn write_dimacs(graph: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", graph.order(), graph.size());
    for &(u, v) in graph.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn write_edge_list(graph: &Graph) -> String {
    let mut out = format!("n {}\n", graph.order());
    for &(u, v) in graph.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
