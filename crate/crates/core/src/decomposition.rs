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

//! Clique-sum decompositions: construction orders of 2-trees and Wagner
//! decompositions of edge-maximal K5-minor-free graphs into plane
//! triangulations and copies of the Wagner graph.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
pub use crate::generators::PieceKind;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::recognition::{is_plane_triangulation, is_wagner_graph, recognize_2tree};

/// A vertex of a 2-tree construction order with the edge it attaches to.
pub type Attachment = (Vertex, Option<(Vertex, Vertex)>);

/// Construction order of a 2-tree. The first three entries carry no
/// attachment edge; every later vertex is paired with the edge it was
/// attached to.
pub fn two_tree_order(g: &Graph) -> Result<Vec<Attachment>> {
    let order = recognize_2tree(g)?
        .ok_or_else(|| Error::NotTwoTree("no degree-2 vertex with adjacent neighbours remains".into()))?;
    let mut placed = vec![false; g.n()];
    let mut out = Vec::with_capacity(order.len());
    for (i, &v) in order.iter().enumerate() {
        let attach = (i >= 3).then(|| {
            let earlier: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&w| placed[w]).collect();
            (earlier[0], earlier[1])
        });
        placed[v] = true;
        out.push((v, attach));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub kind: PieceKind,
    /// Piece vertex `j` is vertex `vertices[j]` of the decomposed graph.
    pub vertices: VertexSet,
    pub graph: Graph,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Glue {
    pub parent: usize,
    pub child: usize,
    pub boundary: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WagnerDecomposition {
    pub n: usize,
    pub pieces: Vec<Piece>,
    /// Tree edges in breadth-first order from piece 0, so every parent is
    /// reached before its children.
    pub glues: Vec<Glue>,
}

impl WagnerDecomposition {
    pub fn count(&self, kind: PieceKind) -> usize {
        self.pieces.iter().filter(|p| p.kind == kind).count()
    }
}

impl fmt::Display for WagnerDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |s: &VertexSet| s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        for (i, p) in self.pieces.iter().enumerate() {
            writeln!(f, "piece {i} kind={} vertices={}", p.kind, join(&p.vertices))?;
        }
        for e in &self.glues {
            writeln!(f, "glue {} {} boundary={}", e.parent, e.child, join(&e.boundary))?;
        }
        Ok(())
    }
}

/// Leaf-first recursive decomposition. Returns `None` when some part is
/// neither a plane triangulation nor the Wagner graph and has no separating
/// edge or triangle.
pub fn wagner_decompose(g: &Graph) -> Result<Option<WagnerDecomposition>> {
    if g.n() < 4 {
        return Err(Error::Precondition(format!("decomposition needs n >= 4, got {}", g.n())));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut builder = Builder {
        g,
        pieces: Vec::new(),
        links: Vec::new(),
    };
    if !builder.split((0..g.n()).collect())? {
        return Ok(None);
    }
    let glues = orient(builder.pieces.len(), builder.links);
    Ok(Some(WagnerDecomposition {
        n: g.n(),
        pieces: builder.pieces,
        glues,
    }))
}

struct Builder<'g> {
    g: &'g Graph,
    pieces: Vec<Piece>,
    links: Vec<(usize, usize, VertexSet)>,
}

impl Builder<'_> {
    fn split(&mut self, part: Vec<Vertex>) -> Result<bool> {
        let vertices = VertexSet::from_unsorted(part);
        let (sub, map) = self.g.induced_subgraph(&vertices)?;
        let kind = if sub.n() >= 4 && is_plane_triangulation(&sub) {
            Some(PieceKind::Triangulation)
        } else if is_wagner_graph(&sub).is_some() {
            Some(PieceKind::Wagner)
        } else {
            None
        };
        if let Some(kind) = kind {
            self.pieces.push(Piece {
                kind,
                vertices,
                graph: sub,
            });
            return Ok(true);
        }
        let Some(local_sep) = find_clique_separator(&sub) else {
            return Ok(false);
        };
        let sep: Vec<Vertex> = local_sep.iter().map(|&v| map.old(v)).collect();
        let boundary = VertexSet::from_unsorted(sep.clone());
        let mut anchors = Vec::new();
        for comp in sub.components_avoiding(&local_sep) {
            let mut part: Vec<Vertex> = comp.iter().map(|&v| map.old(v)).collect();
            part.extend_from_slice(&sep);
            let first = self.pieces.len();
            if !self.split(part)? {
                return Ok(false);
            }
            let anchor = (first..self.pieces.len())
                .find(|&i| boundary.is_subset(&self.pieces[i].vertices))
                .ok_or_else(|| {
                    Error::InternalInconsistency(format!("separator {boundary} lies in no leaf of its part"))
                })?;
            anchors.push(anchor);
        }
        for &child in &anchors[1..] {
            self.links.push((anchors[0], child, boundary.clone()));
        }
        Ok(true)
    }
}

/// First separating edge, else first separating triangle, in lexicographic
/// order.
fn find_clique_separator(g: &Graph) -> Option<Vec<Vertex>> {
    let separates = |s: &[Vertex]| g.components_avoiding(s).len() > 1;
    if let Some((u, v)) = g.edges().find(|&(u, v)| separates(&[u, v])) {
        return Some(vec![u, v]);
    }
    for (u, v) in g.edges() {
        for &w in g.neighbors(v) {
            if w > v && g.has_edge(u, w) && separates(&[u, v, w]) {
                return Some(vec![u, v, w]);
            }
        }
    }
    None
}

fn orient(pieces: usize, links: Vec<(usize, usize, VertexSet)>) -> Vec<Glue> {
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); pieces];
    for (i, (a, b, _)) in links.iter().enumerate() {
        incident[*a].push(i);
        incident[*b].push(i);
    }
    let mut seen = vec![false; pieces];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    let mut glues = Vec::with_capacity(links.len());
    while let Some(p) = queue.pop_front() {
        for &i in &incident[p] {
            let (a, b, s) = &links[i];
            let q = if *a == p { *b } else { *a };
            if !seen[q] {
                seen[q] = true;
                queue.push_back(q);
                glues.push(Glue {
                    parent: p,
                    child: q,
                    boundary: s.clone(),
                });
            }
        }
    }
    glues
}

/// Glues the pieces back together.
pub fn reconstruct(d: &WagnerDecomposition) -> Result<Graph> {
    let inconsistent = |what: String| Error::InternalInconsistency(format!("inconsistent vertex maps: {what}"));
    let mut edges = Vec::new();
    for (i, p) in d.pieces.iter().enumerate() {
        if p.vertices.len() != p.graph.n() {
            return Err(inconsistent(format!("piece {i} maps {} of {} vertices", p.vertices.len(), p.graph.n())));
        }
        if p.vertices.iter().any(|&v| v >= d.n) {
            return Err(inconsistent(format!("piece {i} names a vertex outside 0..{}", d.n)));
        }
        let ids = p.vertices.as_slice();
        edges.extend(p.graph.edges().map(|(a, b)| (ids[a], ids[b])));
    }
    if d.glues.len() + 1 != d.pieces.len() {
        return Err(inconsistent(format!("{} glues for {} pieces", d.glues.len(), d.pieces.len())));
    }
    for e in &d.glues {
        for side in [e.parent, e.child] {
            let Some(p) = d.pieces.get(side) else {
                return Err(inconsistent(format!("glue names missing piece {side}")));
            };
            let local: Option<Vec<Vertex>> = e
                .boundary
                .iter()
                .map(|v| p.vertices.as_slice().binary_search(v).ok())
                .collect();
            match local {
                Some(local) if p.graph.is_clique(&local) => {}
                _ => return Err(inconsistent(format!("boundary {} is not a clique of piece {side}", e.boundary))),
            }
        }
    }
    Graph::from_edges(d.n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, gen_apollonian, wagner};

    fn two_k4(shared: usize) -> Graph {
        let second: Vec<Vertex> = (0..shared).chain(4..8 - shared).collect();
        let k4 = |vs: &[Vertex]| -> Vec<(Vertex, Vertex)> {
            vs.iter().enumerate().flat_map(|(i, &a)| vs[i + 1..].iter().map(move |&b| (a, b))).collect()
        };
        let mut edges = k4(&[0, 1, 2, 3]);
        edges.extend(k4(&second));
        Graph::from_edges(8 - shared, edges).unwrap()
    }

    #[test]
    fn two_tree_orders() {
        let order = two_tree_order(&complete(3)).unwrap();
        assert_eq!(order, vec![(0, None), (1, None), (2, None)]);
        let fan = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 2), (0, 3), (0, 4)]).unwrap();
        let order = two_tree_order(&fan).unwrap();
        for &(v, attach) in &order[3..] {
            let (a, b) = attach.unwrap();
            assert!(fan.has_edge(v, a) && fan.has_edge(v, b) && fan.has_edge(a, b));
        }
        assert!(matches!(two_tree_order(&cycle(5).unwrap()), Err(Error::NotTwoTree(_))));
    }

    #[test]
    fn single_leaves() {
        let d = wagner_decompose(&gen_apollonian(20, 4).unwrap()).unwrap().unwrap();
        assert_eq!(d.pieces.len(), 1);
        assert_eq!(d.pieces[0].kind, PieceKind::Triangulation);
        let d = wagner_decompose(&wagner()).unwrap().unwrap();
        assert_eq!(d.pieces.len(), 1);
        assert_eq!(d.pieces[0].kind, PieceKind::Wagner);
        assert_eq!(reconstruct(&d).unwrap(), wagner());
    }

    #[test]
    fn k4_sums() {
        let g = two_k4(2);
        let d = wagner_decompose(&g).unwrap().unwrap();
        assert_eq!(d.pieces.len(), 2);
        assert_eq!(d.glues[0].boundary.as_slice(), &[0, 1]);
        assert_eq!(reconstruct(&d).unwrap(), g);
        // Gluing two K4's on a triangle yields a plane triangulation.
        let g = two_k4(3);
        assert_eq!(g.n(), 5);
        let d = wagner_decompose(&g).unwrap().unwrap();
        assert_eq!(d.pieces.len(), 1);
        assert_eq!(reconstruct(&d).unwrap(), g);
    }

    #[test]
    fn triangle_separators() {
        let apexes = [3, 4, 5];
        let edges = [(0, 1), (0, 2), (1, 2)]
            .into_iter()
            .chain(apexes.iter().flat_map(|&x| [(0, x), (1, x), (2, x)]));
        let g = Graph::from_edges(6, edges).unwrap();
        let d = wagner_decompose(&g).unwrap().unwrap();
        assert_eq!(d.pieces.len(), 3);
        assert_eq!(d.glues[0].boundary.as_slice(), &[0, 1, 2]);
        assert_eq!(reconstruct(&d).unwrap(), g);
        let text = d.to_string();
        assert!(text.contains("piece 2 kind=triangulation vertices=0,1,2,5"));
        assert!(text.contains("glue 0 1 boundary=0,1,2\nglue 0 2 boundary=0,1,2"));
    }

    #[test]
    fn non_maximal_inputs() {
        assert_eq!(wagner_decompose(&cycle(6).unwrap()).unwrap(), None);
        let k4_minus = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).unwrap();
        assert_eq!(wagner_decompose(&k4_minus).unwrap(), None);
        assert!(wagner_decompose(&complete(3)).is_err());
    }

    #[test]
    fn reconstruct_rejects_bad_maps() {
        let mut d = wagner_decompose(&two_k4(2)).unwrap().unwrap();
        d.glues[0].boundary = VertexSet::from_unsorted(vec![2, 3]);
        assert!(reconstruct(&d).is_err());
    }
}
