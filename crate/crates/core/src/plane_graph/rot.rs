//! The `.rot` text format.
//!
//! ```text
//! # optional comments
//! 4
//! 0: 1 2 3
//! ...
//! ```
//! One line per vertex, `id: a b c` with neighbors in clockwise order.

use std::fmt::Write;

use super::{EmbeddedGraph, GraphError};

pub fn parse_graph(text: &str) -> Result<EmbeddedGraph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let syntax = |line: usize, msg: &str| GraphError::Syntax {
        line,
        msg: msg.to_string(),
    };

    let (line, header) = lines.next().ok_or_else(|| syntax(0, "missing vertex count"))?;
    let n: usize = header
        .parse()
        .map_err(|_| syntax(line, "vertex count must be a nonnegative integer"))?;

    let mut rotation: Vec<Option<[usize; 3]>> = vec![None; n];
    for (line, text) in lines {
        let (id, rest) = text
            .split_once(':')
            .ok_or_else(|| syntax(line, "expected `id: a b c`"))?;
        let id: usize = id
            .trim()
            .parse()
            .map_err(|_| syntax(line, "bad vertex id"))?;
        if id >= n {
            return Err(GraphError::UnknownVertex(id));
        }
        if rotation[id].is_some() {
            return Err(syntax(line, "vertex listed twice"));
        }
        let nbrs = rest
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| syntax(line, "bad neighbor id"))?;
        if nbrs.len() != 3 {
            return Err(GraphError::NonCubic {
                vertex: id,
                degree: nbrs.len(),
            });
        }
        rotation[id] = Some([nbrs[0], nbrs[1], nbrs[2]]);
    }
    let rotation = rotation
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or(GraphError::NonCubic { vertex: v, degree: 0 }))
        .collect::<Result<Vec<_>, _>>()?;
    EmbeddedGraph::from_rotation(rotation)
}

pub fn write_graph(g: &EmbeddedGraph) -> String {
    let mut out = String::new();
    writeln!(out, "{}", g.vertex_count()).unwrap();
    for (v, [a, b, c]) in g.rotation().iter().enumerate() {
        writeln!(out, "{v}: {a} {b} {c}").unwrap();
    }
    out
}
