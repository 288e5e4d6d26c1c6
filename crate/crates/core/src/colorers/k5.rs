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

//! Three colors for edge-maximal K5-minor-free graphs, piece by piece along
//! a Wagner decomposition, with no monochromatic triangle.

use std::collections::VecDeque;

use super::{ColoringCertificate, Rule, TraceStep};
use crate::cliques::{maximal_cliques, VertexColoring};
use crate::decomposition::{wagner_decompose, Piece, PieceKind};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::recognition::is_wagner_graph;
use crate::degeneracy_order;

const V8_PROPER: [u32; 8] = [1, 2, 1, 2, 3, 1, 2, 3];

/// Boundary colors for an edge of the canonical Wagner graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct V8Prescription {
    pub edge: (Vertex, Vertex),
    pub colors: (u32, u32),
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

/// Number of triangles whose three vertices share a color.
pub fn monochromatic_triangles(g: &Graph, colors: &[u32]) -> usize {
    triangles(g)
        .into_iter()
        .filter(|&[a, b, c]| colors[a] == colors[b] && colors[b] == colors[c])
        .count()
}

/// Greedy proper coloring along the reversed smallest-last order (at most
/// six colors on K5-minor-free graphs), then classes merged pairwise.
pub fn merge_coloring_triangulation(g: &Graph) -> Result<VertexColoring> {
    if let Some((u, v)) = g.edges().find(|&(u, v)| !g.neighbors(u).iter().any(|&w| g.has_edge(v, w))) {
        return Err(Error::Precondition(format!("edge {u} {v} lies in no triangle")));
    }
    let mut proper = vec![0u32; g.n()];
    for &v in degeneracy_order(g).iter().rev() {
        let mut used = [false; 8];
        for &w in g.neighbors(v) {
            if let Some(slot) = used.get_mut(proper[w] as usize) {
                *slot = true;
            }
        }
        let c = (1..8).find(|&c| !used[c]).unwrap_or(8) as u32;
        if c > 6 {
            return Err(Error::Precondition(format!(
                "greedy coloring needs more than 6 colors at vertex {v}; graph is not K5-minor-free"
            )));
        }
        proper[v] = c;
    }
    VertexColoring::new(proper.into_iter().map(|c| c.div_ceil(2)).collect(), 3)
}

/// A 3-coloring of the canonical Wagner graph. Without a prescription it is
/// the fixed proper coloring; distinct prescribed colors permute it; equal
/// prescribed colors give a coloring proper on every edge except the
/// prescribed one.
pub fn color_v8(boundary: Option<V8Prescription>) -> Result<VertexColoring> {
    let Some(V8Prescription { edge: (u, v), colors: (a, b) }) = boundary else {
        return VertexColoring::new(V8_PROPER.to_vec(), 3);
    };
    let v8 = crate::generators::wagner();
    if u >= 8 || v >= 8 || !v8.has_edge(u, v) {
        return Err(Error::Precondition(format!("{u} {v} is not an edge of the Wagner graph")));
    }
    if !(1..=3).contains(&a) || !(1..=3).contains(&b) {
        return Err(Error::Precondition(format!("prescribed colors ({a}, {b}) outside 1..=3")));
    }
    let base: Vec<u32> = if a == b {
        let mut colors = [0u32; 8];
        colors[u] = 1;
        colors[v] = 1;
        if !proper_except(&v8, (u, v), &mut colors, 0) {
            return Err(Error::InternalInconsistency(format!(
                "no coloring of the Wagner graph minus {u} {v} with equal endpoints"
            )));
        }
        colors.to_vec()
    } else {
        V8_PROPER.to_vec()
    };
    let (p, q) = (base[u], base[v]);
    let mut perm = [0u32; 4];
    perm[p as usize] = a;
    perm[q as usize] = b;
    if p != q {
        let rest = 6 - p - q;
        perm[rest as usize] = 6 - a - b;
    } else {
        let others: Vec<u32> = (1..=3).filter(|&c| c != p).collect();
        let targets: Vec<u32> = (1..=3).filter(|&c| c != a).collect();
        perm[others[0] as usize] = targets[0];
        perm[others[1] as usize] = targets[1];
    }
    VertexColoring::new(base.iter().map(|&c| perm[c as usize]).collect(), 3)
}

fn proper_except(g: &Graph, skip: (Vertex, Vertex), colors: &mut [u32; 8], v: Vertex) -> bool {
    if v == 8 {
        return true;
    }
    if colors[v] != 0 {
        return proper_except(g, skip, colors, v + 1);
    }
    for c in 1..=3 {
        let clash = g.neighbors(v).iter().any(|&w| {
            colors[w] == c && (v.min(w), v.max(w)) != (skip.0.min(skip.1), skip.0.max(skip.1))
        });
        if !clash {
            colors[v] = c;
            if proper_except(g, skip, colors, v + 1) {
                return true;
            }
            colors[v] = 0;
        }
    }
    false
}

/// Extends boundary colors to a 3-coloring of a triangulation piece with no
/// monochromatic triangle and no monochromatic hyperedge among `hyperedges`
/// (piece coordinates). Backtracking in breadth-first order from the
/// boundary, colors tried in increasing order.
pub fn extend_into_piece(
    piece: &Graph,
    hyperedges: &[VertexSet],
    boundary: &[(Vertex, u32)],
) -> Result<VertexColoring> {
    let n = piece.n();
    let bverts: Vec<Vertex> = boundary.iter().map(|&(v, _)| v).collect();
    if !(2..=3).contains(&bverts.len()) || bverts.iter().any(|&v| v >= n) || !piece.is_clique(&bverts) {
        return Err(Error::Precondition(format!("boundary {bverts:?} is not a K2 or K3 of the piece")));
    }
    let mut colors = vec![0u32; n];
    for &(v, c) in boundary {
        if !(1..=3).contains(&c) {
            return Err(Error::Precondition(format!("boundary color {c} outside 1..=3")));
        }
        colors[v] = c;
    }
    let mut constraints: Vec<Vec<Vertex>> = triangles(piece).into_iter().map(|t| t.to_vec()).collect();
    for h in hyperedges {
        if h.len() < 2 || h.iter().any(|&v| v >= n) {
            return Err(Error::Precondition(format!("hyperedge {h} does not lie in the piece")));
        }
        constraints.push(h.as_slice().to_vec());
    }
    if let Some(bad) = constraints
        .iter()
        .find(|c| c.iter().all(|&v| colors[v] != 0 && colors[v] == colors[c[0]]))
    {
        return Err(Error::Precondition(format!("boundary colors make {bad:?} monochromatic")));
    }

    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let mut queue: VecDeque<Vertex> = VecDeque::new();
    let mut sources = bverts.clone();
    sources.sort_unstable();
    for &s in &sources {
        seen[s] = true;
        queue.push_back(s);
    }
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &w in piece.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    order.extend((0..n).filter(|&v| !seen[v]));
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut closing: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, c) in constraints.iter().enumerate() {
        let last = c.iter().copied().max_by_key(|&v| position[v]).expect("non-empty constraint");
        closing[position[last]].push(i);
    }
    let free: Vec<Vertex> = order.iter().copied().filter(|&v| colors[v] == 0).collect();
    let ok_at = |colors: &[u32], idx: usize| {
        closing[idx].iter().all(|&ci| {
            let c = &constraints[ci];
            !c.iter().all(|&v| colors[v] == colors[c[0]])
        })
    };
    let mut choice = vec![0u32; free.len()];
    let mut i = 0;
    while i < free.len() {
        let v = free[i];
        choice[i] += 1;
        if choice[i] > 3 {
            choice[i] = 0;
            colors[v] = 0;
            if i == 0 {
                return Err(Error::InternalInconsistency(
                    "piece extension search exhausted; the boundary coloring cannot be extended".into(),
                ));
            }
            i -= 1;
            continue;
        }
        colors[v] = choice[i];
        if ok_at(&colors, position[v]) {
            i += 1;
        }
    }
    VertexColoring::new(colors, 3)
}

/// Three colors for a connected edge-maximal K5-minor-free graph.
pub fn color_maximal_k5_free(g: &Graph) -> Result<ColoringCertificate> {
    let d = wagner_decompose(g)?.ok_or_else(|| {
        Error::NotDecomposable("no separating edge or triangle in a part that is neither a plane triangulation nor the Wagner graph".into())
    })?;
    let cliques = maximal_cliques(g);
    let mut colors = vec![0u32; g.n()];
    let mut trace = Vec::new();

    let root = &d.pieces[0];
    let local = match root.kind {
        PieceKind::Triangulation => merge_coloring_triangulation(&root.graph)?.colors().to_vec(),
        PieceKind::Wagner => from_canonical(root, color_v8(None)?)?,
    };
    write_piece(&mut colors, root, &local, &[])?;
    trace.push(TraceStep {
        rule: Rule::RootPiece,
        vertex: root.vertices.as_slice()[0],
    });

    for glue in &d.glues {
        let piece = &d.pieces[glue.child];
        let ids = piece.vertices.as_slice();
        let to_local = |v: Vertex| ids.binary_search(&v).expect("boundary lies in the child piece");
        let boundary: Vec<(Vertex, u32)> = glue.boundary.iter().map(|&v| (to_local(v), colors[v])).collect();
        let local = match piece.kind {
            PieceKind::Triangulation => {
                let inside: Vec<VertexSet> = cliques
                    .hyperedges()
                    .filter_map(|h| {
                        h.iter()
                            .map(|v| ids.binary_search(v).ok())
                            .collect::<Option<Vec<_>>>()
                            .map(VertexSet::from_unsorted)
                    })
                    .collect();
                extend_into_piece(&piece.graph, &inside, &boundary)?.colors().to_vec()
            }
            PieceKind::Wagner => {
                let map = is_wagner_graph(&piece.graph)
                    .ok_or_else(|| Error::InternalInconsistency("wagner leaf is not the Wagner graph".into()))?;
                let [(a, ca), (b, cb)] = boundary[..] else {
                    return Err(Error::InternalInconsistency(format!(
                        "wagner piece glued along {}, which is not an edge",
                        glue.boundary
                    )));
                };
                let canonical = color_v8(Some(V8Prescription {
                    edge: (map[a], map[b]),
                    colors: (ca, cb),
                }))?;
                from_canonical(piece, canonical)?
            }
        };
        write_piece(&mut colors, piece, &local, glue.boundary.as_slice())?;
        let first_new = ids.iter().copied().find(|v| !glue.boundary.contains(*v)).unwrap_or(ids[0]);
        trace.push(TraceStep {
            rule: Rule::PieceExtension,
            vertex: first_new,
        });
    }

    let mono = monochromatic_triangles(g, &colors);
    if mono > 0 {
        return Err(Error::InternalInconsistency(format!("{mono} monochromatic triangles after piece coloring")));
    }
    ColoringCertificate::new(g, VertexColoring::new(colors, 3)?, trace)
}

fn from_canonical(piece: &Piece, canonical: VertexColoring) -> Result<Vec<u32>> {
    let map = is_wagner_graph(&piece.graph)
        .ok_or_else(|| Error::InternalInconsistency("wagner leaf is not the Wagner graph".into()))?;
    Ok(map.iter().map(|&c| canonical.color(c)).collect())
}

fn write_piece(colors: &mut [u32], piece: &Piece, local: &[u32], boundary: &[Vertex]) -> Result<()> {
    for (&v, &c) in piece.vertices.iter().zip(local) {
        if colors[v] != 0 {
            if !boundary.contains(&v) || colors[v] != c {
                return Err(Error::InternalInconsistency(format!(
                    "vertex {v} colored twice outside its gluing boundary"
                )));
            }
        } else {
            colors[v] = c;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, gen_apollonian, octahedron, wagner};
    use crate::oracle::oracle_clique_chromatic;

    #[test]
    fn v8_colorings() {
        let v8 = wagner();
        let c = color_v8(None).unwrap();
        assert_eq!(c.colors(), &[1, 2, 1, 2, 3, 1, 2, 3]);
        assert!(v8.edges().all(|(u, v)| c.color(u) != c.color(v)));
        let c = color_v8(Some(V8Prescription { edge: (0, 1), colors: (1, 1) })).unwrap();
        assert_eq!(c.colors(), &[1, 1, 2, 1, 2, 3, 1, 2]);
        let c = color_v8(Some(V8Prescription { edge: (0, 1), colors: (1, 2) })).unwrap();
        assert_eq!((c.color(0), c.color(1)), (1, 2));
        assert!(v8.edges().all(|(u, v)| c.color(u) != c.color(v)));
        let c = color_v8(Some(V8Prescription { edge: (3, 7), colors: (3, 3) })).unwrap();
        assert_eq!((c.color(3), c.color(7)), (3, 3));
        assert!(v8.edges().filter(|&e| e != (3, 7)).all(|(u, v)| c.color(u) != c.color(v)));
        assert!(color_v8(Some(V8Prescription { edge: (0, 2), colors: (1, 1) })).is_err());
    }

    #[test]
    fn merge_coloring() {
        for g in [complete(4), octahedron(), gen_apollonian(50, 1).unwrap()] {
            let c = merge_coloring_triangulation(&g).unwrap();
            assert_eq!(monochromatic_triangles(&g, c.colors()), 0);
            assert!(crate::is_clique_coloring(&g, &c).unwrap().is_valid());
        }
        assert!(merge_coloring_triangulation(&Graph::from_edges(2, [(0, 1)]).unwrap()).is_err());
    }

    #[test]
    fn piece_extension() {
        let k4 = complete(4);
        let c = extend_into_piece(&k4, &[], &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(c.color(3), 1);
        let c = extend_into_piece(&k4, &[], &[(0, 1), (1, 1), (2, 2)]).unwrap();
        assert_eq!(c.color(3), 2);
        let oct = octahedron();
        let c = extend_into_piece(&oct, &[], &[(0, 1), (1, 1)]).unwrap();
        assert_eq!(monochromatic_triangles(&oct, c.colors()), 0);
        assert!(extend_into_piece(&k4, &[], &[(0, 1), (1, 1), (2, 1)]).is_err());
    }

    #[test]
    fn maximal_k5_free_examples() {
        let c = color_maximal_k5_free(&wagner()).unwrap();
        assert_eq!(c.coloring.colors_used(), 3);
        assert_eq!(oracle_clique_chromatic(&wagner(), 3).unwrap(), Some(3));
        let g = gen_apollonian(30, 2).unwrap();
        let c = color_maximal_k5_free(&g).unwrap();
        assert!(c.coloring.k() <= 3);
        assert_eq!(monochromatic_triangles(&g, c.coloring.colors()), 0);
    }
}
