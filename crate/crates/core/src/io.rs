//! Edge-list text format.
//!
//! ```text
//! # comment lines start with '#'
//! n 5
//! 0 1
//! 1 2
//! ```
//!
//! The `n <count>` header is mandatory (it makes isolated vertices
//! representable) and must precede all edges. Vertices are 0-indexed,
//! whitespace-separated. Writing emits edges with u < v in lexicographic
//! order, so output is byte-deterministic for a given graph.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let first = tokens.next().expect("non-empty line");
        if first == "n" {
            if n.is_some() {
                return Err(Error::EdgeListParse {
                    line: line_no,
                    msg: "duplicate header".into(),
                });
            }
            let count = tokens
                .next()
                .ok_or_else(|| Error::EdgeListParse {
                    line: line_no,
                    msg: "header missing vertex count".into(),
                })?
                .parse::<usize>()
                .map_err(|e| Error::EdgeListParse {
                    line: line_no,
                    msg: format!("bad vertex count: {e}"),
                })?;
            n = Some(count);
        } else {
            if n.is_none() {
                return Err(Error::EdgeListParse {
                    line: line_no,
                    msg: "edge before 'n <count>' header".into(),
                });
            }
            let u = first.parse::<Vertex>().map_err(|e| Error::EdgeListParse {
                line: line_no,
                msg: format!("bad endpoint: {e}"),
            })?;
            let v = tokens
                .next()
                .ok_or_else(|| Error::EdgeListParse {
                    line: line_no,
                    msg: "edge line needs two endpoints".into(),
                })?
                .parse::<Vertex>()
                .map_err(|e| Error::EdgeListParse {
                    line: line_no,
                    msg: format!("bad endpoint: {e}"),
                })?;
            edges.push((u, v));
        }
        // trailing tokens are tolerated as inline annotations only after '#'
    }
    let n = n.ok_or_else(|| Error::EdgeListParse {
        line: 0,
        msg: "missing 'n <count>' header".into(),
    })?;
    Graph::build(n, &edges)
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    parse_edge_list(&text)
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", g.n()).expect("string write");
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("string write");
    }
    out
}

pub fn write_edge_list(g: &Graph, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, format_edge_list(g))?;
    Ok(())
}
