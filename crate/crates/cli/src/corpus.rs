//! Declarative corpus specs for the experiment runner.
//!
//! One entry per line: `star <m>`, `path <n>`, `cycle <n>`, `complete <n>`
//! or `file <path>` (resolved relative to the spec file). `#` starts a
//! comment.

use crate::format::{self, ParseError};
use mycdist_core::families;
use mycdist_core::graph::Graph;
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("line {line}: unknown corpus entry {entry:?}")]
    UnknownEntry { line: usize, entry: String },
    #[error("line {line}: {detail}")]
    BadParameter { line: usize, detail: String },
    #[error("line {line}: cannot read {path}: {source}")]
    Io {
        line: usize,
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("line {line}: {source}")]
    Parse { line: usize, source: ParseError },
}

#[derive(Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub graph: Graph,
}

/// Parse a corpus spec; `base_dir` anchors relative `file` entries.
pub fn parse_corpus(text: &str, base_dir: &Path) -> Result<Vec<CorpusEntry>, CorpusError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let entry = raw.trim();
        if entry.is_empty() || entry.starts_with('#') {
            continue;
        }
        let parts: Vec<&str> = entry.split_whitespace().collect();
        let parse_num = |s: &str, min: usize| {
            s.parse::<usize>()
                .ok()
                .filter(|&v| v >= min)
                .ok_or_else(|| CorpusError::BadParameter {
                    line,
                    detail: format!("expected an integer >= {min}, got {s:?}"),
                })
        };
        match parts.as_slice() {
            ["star", m] => {
                let m = parse_num(m, 2)?;
                out.push(CorpusEntry { name: format!("star-{m}"), graph: families::star(m) });
            }
            ["path", n] => {
                let n = parse_num(n, 3)?;
                out.push(CorpusEntry { name: format!("path-{n}"), graph: families::path(n) });
            }
            ["cycle", n] => {
                let n = parse_num(n, 3)?;
                out.push(CorpusEntry { name: format!("cycle-{n}"), graph: families::cycle(n) });
            }
            ["complete", n] => {
                let n = parse_num(n, 3)?;
                out.push(CorpusEntry { name: format!("complete-{n}"), graph: families::complete(n) });
            }
            ["file", path] => {
                let full = base_dir.join(path);
                let text = std::fs::read_to_string(&full).map_err(|source| CorpusError::Io {
                    line,
                    path: full.clone(),
                    source,
                })?;
                let graph = format::parse_edge_list(&text)
                    .map_err(|source| CorpusError::Parse { line, source })?;
                let name = full
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| path.to_string());
                out.push(CorpusEntry { name, graph });
            }
            _ => {
                return Err(CorpusError::UnknownEntry { line, entry: entry.to_string() });
            }
        }
    }
    Ok(out)
}
