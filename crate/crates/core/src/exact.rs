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

//! Exact 2-clique-coloring by backtracking search with unit propagation.
//!
//! Size-2 hyperedges act as disequalities and larger ones as not-all-equal
//! constraints. A hyperedge whose assigned vertices all share one color and
//! which has a single unassigned vertex forces that vertex to the other color.

use crate::cliques::{maximal_cliques, VertexColoring};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Order above which the solver refuses to run as a fallback.
pub const FALLBACK_LIMIT: usize = 64;

/// Finds a valid 2-clique-coloring of `g` if one exists; `None` means UNSAT.
///
/// Components are solved independently in breadth-first variable order,
/// trying color 1 before color 2. The result is deterministic.
pub fn solve_2_clique_coloring_exact(g: &Graph) -> Option<VertexColoring> {
    let hyperedges: Vec<Vec<Vertex>> = maximal_cliques(g)
        .hyperedges()
        .map(|c| c.as_slice().to_vec())
        .collect();
    let mut solver = NaeSolver::new(g.n(), hyperedges);
    for comp in g.connected_components() {
        let order = g.bfs_order(comp.as_slice()[0]);
        if !solver.solve(&order) {
            return None;
        }
    }
    let colors = solver.value.iter().map(|c| c.unwrap_or(1) as u32).collect();
    Some(VertexColoring::new(colors, 2).expect("solver assigns colors 1 and 2"))
}

/// The same search behind the fallback size guard.
pub fn solve_2_clique_coloring_guarded(g: &Graph) -> Result<Option<VertexColoring>> {
    if g.n() > FALLBACK_LIMIT {
        return Err(Error::SizeGuard {
            operation: "exact 2-clique-coloring fallback",
            n: g.n(),
            limit: FALLBACK_LIMIT,
        });
    }
    Ok(solve_2_clique_coloring_exact(g))
}

struct NaeSolver {
    edges: Vec<Vec<Vertex>>,
    occurs: Vec<Vec<usize>>,
    // count[e][c] = vertices of edge e currently colored c (c in 1..=2)
    count: Vec<[u32; 3]>,
    value: Vec<Option<u8>>,
    trail: Vec<Vertex>,
}

impl NaeSolver {
    fn new(n: usize, edges: Vec<Vec<Vertex>>) -> Self {
        let mut occurs = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            for &v in e {
                occurs[v].push(i);
            }
        }
        NaeSolver {
            count: vec![[0; 3]; edges.len()],
            edges,
            occurs,
            value: vec![None; n],
            trail: Vec::new(),
        }
    }

    /// Assigns `v := c` and propagates. Returns false on conflict; the trail
    /// keeps whatever was assigned so the caller can undo it.
    fn assign(&mut self, v: Vertex, c: u8) -> bool {
        let mut queue = vec![(v, c)];
        while let Some((x, cx)) = queue.pop() {
            match self.value[x] {
                Some(existing) if existing == cx => continue,
                Some(_) => return false,
                None => {}
            }
            self.value[x] = Some(cx);
            self.trail.push(x);
            for &e in &self.occurs[x] {
                self.count[e][cx as usize] += 1;
            }
            let other = 3 - cx;
            for &e in &self.occurs[x] {
                let cnt = self.count[e];
                let size = self.edges[e].len() as u32;
                if cnt[cx as usize] == size {
                    return false;
                }
                if cnt[cx as usize] == size - 1 && cnt[other as usize] == 0 {
                    let free = self.edges[e]
                        .iter()
                        .copied()
                        .find(|&y| self.value[y].is_none());
                    if let Some(y) = free {
                        queue.push((y, other));
                    }
                }
            }
        }
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().expect("trail longer than mark");
            let cx = self.value[x].take().expect("trailed vertex is assigned");
            for &e in &self.occurs[x] {
                self.count[e][cx as usize] -= 1;
            }
        }
    }

    fn solve(&mut self, order: &[Vertex]) -> bool {
        // Explicit stack of (position in order, trail mark, next color to try).
        let mut stack: Vec<(usize, usize, u8)> = Vec::new();
        let mut pos = 0;
        loop {
            while pos < order.len() && self.value[order[pos]].is_some() {
                pos += 1;
            }
            if pos == order.len() {
                return true;
            }
            stack.push((pos, self.trail.len(), 1));
            loop {
                let Some(top) = stack.last_mut() else {
                    return false;
                };
                let (p, mark, color) = *top;
                if color > 2 {
                    stack.pop();
                    if let Some(&(_, parent_mark, _)) = stack.last() {
                        self.undo_to(parent_mark);
                    }
                    continue;
                }
                top.2 += 1;
                self.undo_to(mark);
                if self.assign(order[p], color) {
                    pos = p + 1;
                    break;
                }
            }
        }
    }
}
