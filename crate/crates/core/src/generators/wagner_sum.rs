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

//! Clique-sums of triangulations and Wagner graphs built from a blueprint.

use std::fmt;
use std::str::FromStr;

use super::{gen_apollonian, wagner, Lcg64};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PieceKind {
    Triangulation,
    Wagner,
}

/// One blueprint line: a piece and the clique size it is glued along.
/// The arity of the first piece is ignored.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlueprintPiece {
    pub kind: PieceKind,
    pub size: usize,
    pub arity: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Blueprint(pub Vec<BlueprintPiece>);

/// A realized clique-sum with the decomposition it was built from.
#[derive(Clone, Debug)]
pub struct WagnerSum {
    pub graph: Graph,
    /// Piece kind and its vertices in the coordinates of `graph`; piece
    /// vertex `j` is `vertices[j]`.
    pub pieces: Vec<(PieceKind, Vec<Vertex>)>,
    /// `(parent piece, child piece, boundary)` for every piece after the first.
    pub glues: Vec<(usize, usize, VertexSet)>,
}

impl fmt::Display for PieceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PieceKind::Triangulation => "triangulation",
            PieceKind::Wagner => "wagner",
        })
    }
}

impl FromStr for PieceKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "triangulation" => Ok(PieceKind::Triangulation),
            "wagner" => Ok(PieceKind::Wagner),
            other => Err(format!("unknown piece kind `{other}`")),
        }
    }
}

/// Parses lines of the form `piece <kind> <size> glue<arity>`; blank lines
/// and `#` comments are skipped.
pub fn parse_blueprint(text: &str) -> Result<Blueprint> {
    let mut pieces = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse { line: i + 1, message };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [tag, kind, size, glue] = fields[..] else {
            return Err(err("expected `piece <kind> <size> glue<arity>`".into()));
        };
        if tag != "piece" {
            return Err(err(format!("expected `piece`, found `{tag}`")));
        }
        let kind = kind.parse::<PieceKind>().map_err(err)?;
        let size = size
            .parse::<usize>()
            .map_err(|_| err(format!("bad size `{size}`")))?;
        let arity = glue
            .strip_prefix("glue")
            .and_then(|a| a.parse::<usize>().ok())
            .ok_or_else(|| err(format!("bad glue field `{glue}`")))?;
        pieces.push(BlueprintPiece { kind, size, arity });
    }
    Ok(Blueprint(pieces))
}

pub fn write_blueprint(b: &Blueprint) -> String {
    b.0.iter()
        .map(|p| format!("piece {} {} glue{}\n", p.kind, p.size, p.arity))
        .collect()
}

fn triangles(g: &Graph) -> Vec<[Vertex; 3]> {
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        for &w in g.neighbors(v) {
            if w > v && g.has_edge(u, w) {
                out.push([u, v, w]);
            }
        }
    }
    out
}

/// Glues the blueprint's pieces one after another onto a uniformly chosen
/// edge (arity 2) or triangle (arity 3) of the graph built so far.
///
/// Triangulation pieces are random Apollonian networks seeded from the
/// blueprint seed and attach by their triangle `0 1 2` or edge `0 1`;
/// Wagner pieces attach by their edge `0 1`.
pub fn gen_wagner_sum(blueprint: &Blueprint, seed: u64) -> Result<WagnerSum> {
    if blueprint.0.is_empty() {
        return Err(Error::Generator("blueprint has no pieces".into()));
    }
    let mut rng = Lcg64::new(seed);
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut n = 0;
    let mut pieces: Vec<(PieceKind, Vec<Vertex>)> = Vec::new();
    let mut glues = Vec::new();
    let mut current = Graph::empty(0);

    for (index, bp) in blueprint.0.iter().enumerate() {
        let piece = match bp.kind {
            PieceKind::Triangulation => gen_apollonian(bp.size, rng.next_u64())?,
            PieceKind::Wagner => {
                if bp.size != 8 {
                    return Err(Error::Generator(format!(
                        "wagner pieces have 8 vertices, blueprint says {}",
                        bp.size
                    )));
                }
                wagner()
            }
        };
        let map: Vec<Vertex> = if index == 0 {
            (0..piece.n()).collect()
        } else {
            let target: Vec<Vertex> = match (bp.arity, bp.kind) {
                (2, _) => {
                    let all: Vec<(Vertex, Vertex)> = current.edges().collect();
                    let (a, b) = all[rng.below(all.len())];
                    vec![a, b]
                }
                (3, PieceKind::Triangulation) => {
                    let all = triangles(&current);
                    if all.is_empty() {
                        return Err(Error::Generator(format!(
                            "piece {index}: no triangle to glue along"
                        )));
                    }
                    all[rng.below(all.len())].to_vec()
                }
                (3, PieceKind::Wagner) => {
                    return Err(Error::Generator(format!(
                        "piece {index}: wagner pieces have no triangle and glue along K2 only"
                    )))
                }
                (a, _) => {
                    return Err(Error::Generator(format!(
                        "piece {index}: glue arity must be 2 or 3, got {a}"
                    )))
                }
            };
            let parent = pieces
                .iter()
                .position(|(_, vs)| target.iter().all(|t| vs.contains(t)))
                .expect("every clique of a clique-sum lies in one piece");
            glues.push((parent, index, VertexSet::from_unsorted(target.clone())));
            let mut map = target;
            map.extend(n..n + piece.n() - bp.arity);
            map
        };
        edges.extend(piece.edges().map(|(u, v)| (map[u], map[v])));
        n = n.max(map.iter().copied().max().map_or(0, |x| x + 1));
        pieces.push((bp.kind, map));
        current = Graph::from_edges(n, edges.iter().copied())?;
    }
    Ok(WagnerSum {
        graph: current,
        pieces,
        glues,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(text: &str) -> Blueprint {
        parse_blueprint(text).unwrap()
    }

    #[test]
    fn single_piece_is_the_triangulation() {
        let s = gen_wagner_sum(&bp("piece triangulation 10 glue2"), 4).unwrap();
        assert_eq!(s.graph.n(), 10);
        assert_eq!(s.graph.m(), 24);
        assert!(s.glues.is_empty());
    }

    #[test]
    fn gluing_arithmetic() {
        let s = gen_wagner_sum(
            &bp("piece triangulation 6 glue2\npiece wagner 8 glue2\n"),
            1,
        )
        .unwrap();
        assert_eq!(s.graph.n(), 12);
        assert_eq!(s.graph.m(), 12 + 12 - 1);
        let s = gen_wagner_sum(
            &bp("piece triangulation 8 glue2\npiece triangulation 8 glue3\npiece wagner 8 glue2"),
            2,
        )
        .unwrap();
        assert_eq!(s.graph.n(), 8 + 5 + 6);
        assert_eq!(s.glues.len(), 2);
        assert_eq!(s.glues[0].2.len(), 3);
    }

    #[test]
    fn infeasible_blueprints() {
        let e = gen_wagner_sum(&bp("piece wagner 8 glue2\npiece triangulation 5 glue3"), 0);
        assert!(matches!(e, Err(Error::Generator(_))));
        let e = gen_wagner_sum(&bp("piece triangulation 5 glue2\npiece wagner 8 glue3"), 0);
        assert!(e.is_err());
        assert!(gen_wagner_sum(&Blueprint::default(), 0).is_err());
        assert!(gen_wagner_sum(&bp("piece wagner 9 glue2"), 0).is_err());
    }

    #[test]
    fn blueprint_text_round_trip() {
        let text = "piece triangulation 8 glue2\npiece wagner 8 glue2\n";
        assert_eq!(write_blueprint(&bp(text)), text);
        assert!(parse_blueprint("piece cube 8 glue2").is_err());
        assert!(parse_blueprint("piece wagner 8 glueX").is_err());
        let err = parse_blueprint("# ok\npiece wagner 8").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }
}
