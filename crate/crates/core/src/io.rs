// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Text formats: canonical edge lists and coloring files.
//!
//! Edge list: first non-comment line `<n> <m>`, then `m` lines `<u> <v>`.
//! Lines starting with `#` are comments. Canonical output lists each edge
//! once with `u < v`, sorted, LF-terminated.
//!
//! Coloring: `n` whitespace-separated colors, the color of vertex `i` at
//! position `i`.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::cliques::VertexColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn two_numbers(line: usize, s: &str) -> Result<(usize, usize)> {
    let err = |message: String| Error::Parse { line, message };
    let mut it = s.split_whitespace();
    let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
        return Err(err(format!("expected two integers, found `{s}`")));
    };
    let a = a.parse().map_err(|_| err(format!("not a non-negative integer: `{a}`")))?;
    let b = b.parse().map_err(|_| err(format!("not a non-negative integer: `{b}`")))?;
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let Some((header_line, header)) = lines.next() else {
        return Err(Error::Parse {
            line: 1,
            message: "missing `<n> <m>` header".into(),
        });
    };
    let (n, m) = two_numbers(header_line, header).map_err(|e| match e {
        Error::Parse { line, message } => Error::Parse {
            line,
            message: format!("malformed header: {message}"),
        },
        other => other,
    })?;
    let mut seen = HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line, s) in lines {
        last_line = line;
        let (u, v) = two_numbers(line, s)?;
        let err = |message: String| Error::Parse { line, message };
        if u == v {
            return Err(err(format!("self-loop at vertex {u}")));
        }
        if u >= n || v >= n {
            return Err(err(format!("vertex id {} >= n = {n}", u.max(v))));
        }
        let e = (u.min(v), u.max(v));
        if !seen.insert(e) {
            return Err(err(format!("duplicate edge {} {}", e.0, e.1)));
        }
        edges.push(e);
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: last_line,
            message: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edges(n, edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a String cannot fail");
    }
    out
}

/// Parses a coloring; the palette size is the largest color present.
pub fn parse_coloring(text: &str) -> Result<VertexColoring> {
    let mut colors = Vec::new();
    for (line, s) in content_lines(text) {
        for tok in s.split_whitespace() {
            let c: u32 = tok.parse().map_err(|_| Error::Parse {
                line,
                message: format!("not a color: `{tok}`"),
            })?;
            if c == 0 {
                return Err(Error::Parse {
                    line,
                    message: "colors start at 1".into(),
                });
            }
            colors.push(c);
        }
    }
    VertexColoring::from_colors(colors)
}

pub fn write_coloring(c: &VertexColoring) -> String {
    format!("{c}\n")
}
