//! Text formats: edge lists, role side-cars and coloring files.
//!
//! Edge list: first line `n m`, then `m` lines `u v` with 0-based ids.
//! Lines starting with `#` are ignored; duplicate edge lines collapse.
//!
//! Role side-car: one line per vertex, `<id> level <j> <i>` or `<id> root`.
//!
//! Coloring file: one JSON record per line, `{"u":..,"v":..,"color":..}`,
//! in lexicographic edge order.

use mycdist_core::coloring::{ColoringError, EdgeColoring};
use mycdist_core::graph::{Graph, GraphError};
use mycdist_core::mycielski::{LabeledGraph, VertexRole};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: malformed line: {detail}")]
    Malformed { line: usize, detail: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("expected {expected} edge lines, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("coloring: {0}")]
    Coloring(#[from] ColoringError),
    #[error("line {line}: bad coloring record: {detail}")]
    BadRecord { line: usize, detail: String },
}

/// Parse the edge-list format into a graph.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line_no, header) = lines.next().ok_or(ParseError::Malformed {
        line: 1,
        detail: "missing header line \"n m\"".into(),
    })?;
    let mut parts = header.split_whitespace();
    let (n, m) = match (parts.next(), parts.next(), parts.next()) {
        (Some(a), Some(b), None) => {
            let parse = |s: &str| {
                s.parse::<usize>().map_err(|_| ParseError::Malformed {
                    line: line_no,
                    detail: format!("expected a nonnegative integer, got {s:?}"),
                })
            };
            (parse(a)?, parse(b)?)
        }
        _ => {
            return Err(ParseError::Malformed {
                line: line_no,
                detail: format!("expected \"n m\", got {header:?}"),
            })
        }
    };

    let mut g = Graph::new(n);
    let mut edge_lines = 0usize;
    for (line_no, line) in lines {
        let mut parts = line.split_whitespace();
        let (u, v) = match (parts.next(), parts.next(), parts.next()) {
            (Some(a), Some(b), None) => {
                let parse = |s: &str| {
                    s.parse::<usize>().map_err(|_| ParseError::Malformed {
                        line: line_no,
                        detail: format!("expected a vertex id, got {s:?}"),
                    })
                };
                (parse(a)?, parse(b)?)
            }
            _ => {
                return Err(ParseError::Malformed {
                    line: line_no,
                    detail: format!("expected \"u v\", got {line:?}"),
                })
            }
        };
        edge_lines += 1;
        g.add_edge(u, v)
            .map_err(|source| ParseError::Graph { line: line_no, source })?;
    }
    if edge_lines != m {
        return Err(ParseError::EdgeCountMismatch { expected: m, found: edge_lines });
    }
    Ok(g)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let edges = g.edges();
    writeln!(out, "{} {}", g.vertex_count(), edges.len()).unwrap();
    for (u, v) in edges {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn write_roles(lg: &LabeledGraph) -> String {
    let mut out = String::new();
    for (id, role) in lg.roles().iter().enumerate() {
        match role {
            VertexRole::Level { level, base } => writeln!(out, "{id} level {level} {base}").unwrap(),
            VertexRole::Root => writeln!(out, "{id} root").unwrap(),
        }
    }
    out
}

/// Parsed role side-car: role per vertex id, in file order.
pub fn parse_roles(text: &str) -> Result<Vec<(usize, VertexRole)>, ParseError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|_| ParseError::Malformed {
                line: line_no,
                detail: format!("expected an integer, got {s:?}"),
            })
        };
        let role = match parts.as_slice() {
            [id, "root"] => (parse(id)?, VertexRole::Root),
            [id, "level", j, b] => (
                parse(id)?,
                VertexRole::Level { level: parse(j)?, base: parse(b)? },
            ),
            _ => {
                return Err(ParseError::Malformed {
                    line: line_no,
                    detail: format!("expected \"<id> level <j> <i>\" or \"<id> root\", got {line:?}"),
                })
            }
        };
        out.push(role);
    }
    Ok(out)
}

#[derive(Debug, Serialize, Deserialize)]
struct ColorRecord {
    u: usize,
    v: usize,
    color: usize,
}

pub fn write_coloring(c: &EdgeColoring) -> String {
    let mut out = String::new();
    for ((u, v), color) in c.records() {
        let rec = ColorRecord { u, v, color };
        writeln!(out, "{}", serde_json::to_string(&rec).unwrap()).unwrap();
    }
    out
}

/// Parse a coloring file against the graph it is supposed to color. The
/// color count is the maximum color seen.
pub fn parse_coloring(text: &str, g: &Graph) -> Result<EdgeColoring, ParseError> {
    let mut records = Vec::new();
    let mut max_color = 1;
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let rec: ColorRecord = serde_json::from_str(line).map_err(|e| ParseError::BadRecord {
            line: i + 1,
            detail: e.to_string(),
        })?;
        max_color = max_color.max(rec.color);
        records.push(((rec.u, rec.v), rec.color));
    }
    Ok(EdgeColoring::from_assignments(g, records, max_color)?)
}
