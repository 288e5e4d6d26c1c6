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

//! Brute-force ground truth for small graphs: the clique-chromatic number,
//! the clique-transversal number, and transversals read off 2-colorings.

use crate::cliques::{check_clique_coloring, CliqueSet, VertexColoring};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::maximal_cliques;

/// Order above which the exhaustive oracles refuse to run.
pub const ORACLE_LIMIT: usize = 25;

fn guard(g: &Graph, operation: &'static str) -> Result<()> {
    if g.n() > ORACLE_LIMIT {
        Err(Error::SizeGuard {
            operation,
            n: g.n(),
            limit: ORACLE_LIMIT,
        })
    } else {
        Ok(())
    }
}

/// Hyperedges grouped by their largest vertex, so a plain left-to-right
/// assignment can test each one as soon as it is fully colored.
fn edges_by_last(g: &Graph) -> Vec<Vec<Vec<Vertex>>> {
    let mut by_last = vec![Vec::new(); g.n()];
    for c in maximal_cliques(g).hyperedges() {
        let s = c.as_slice();
        by_last[*s.last().expect("hyperedge non-empty")].push(s.to_vec());
    }
    by_last
}

/// χ_C(g) if it is at most `max_k`, otherwise `None`.
///
/// Exhaustive backtracking in vertex-id order; vertex 0 is fixed to color 1
/// and a new color may only be opened after all smaller ones are in use.
pub fn oracle_clique_chromatic(g: &Graph, max_k: u32) -> Result<Option<u32>> {
    guard(g, "clique-chromatic oracle")?;
    if g.n() == 0 {
        return Ok(Some(0));
    }
    let by_last = edges_by_last(g);
    let mut colors = vec![0u32; g.n()];
    for k in 1..=max_k {
        if assign_from(0, k, 0, &by_last, &mut colors) {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

fn assign_from(v: usize, k: u32, used: u32, by_last: &[Vec<Vec<Vertex>>], colors: &mut [u32]) -> bool {
    if v == colors.len() {
        return true;
    }
    let limit = k.min(used + 1);
    for c in 1..=limit {
        colors[v] = c;
        let ok = by_last[v]
            .iter()
            .all(|e| e.iter().any(|&u| colors[u] != c));
        if ok && assign_from(v + 1, k, used.max(c), by_last, colors) {
            return true;
        }
    }
    colors[v] = 0;
    false
}

/// τ_C(g): the least number of vertices meeting every maximal clique of
/// size at least two. Singleton cliques (isolated vertices) impose nothing.
///
/// Iterative deepening over hitting sets, branching on the vertices of the
/// first unmet clique and pruning with a greedy disjoint-clique lower bound.
pub fn oracle_clique_transversal(g: &Graph) -> Result<usize> {
    guard(g, "clique-transversal oracle")?;
    let edges: Vec<Vec<Vertex>> = maximal_cliques(g)
        .hyperedges()
        .map(|c| c.as_slice().to_vec())
        .collect();
    let mut chosen = vec![false; g.n()];
    for budget in 0..=g.n() {
        if hits_all(&edges, &mut chosen, budget) {
            return Ok(budget);
        }
    }
    unreachable!("the whole vertex set meets every clique")
}

fn hits_all(edges: &[Vec<Vertex>], chosen: &mut [bool], budget: usize) -> bool {
    let unmet: Vec<&Vec<Vertex>> = edges
        .iter()
        .filter(|e| !e.iter().any(|&v| chosen[v]))
        .collect();
    let Some(first) = unmet.first() else {
        return true;
    };
    if budget == 0 {
        return false;
    }
    // Pairwise disjoint unmet cliques each need their own vertex.
    let mut blocked = vec![false; chosen.len()];
    let mut disjoint = 0;
    for e in &unmet {
        if e.iter().all(|&v| !blocked[v]) {
            disjoint += 1;
            for &v in e.iter() {
                blocked[v] = true;
            }
        }
    }
    if disjoint > budget {
        return false;
    }
    for &v in first.iter() {
        chosen[v] = true;
        let found = hits_all(edges, chosen, budget - 1);
        chosen[v] = false;
        if found {
            return true;
        }
    }
    false
}

/// The smaller color class of a valid 2-clique-coloring (ties go to color
/// 1). It meets every maximal clique of size at least two and has at most
/// ⌊n/2⌋ vertices.
pub fn transversal_from_coloring(
    g: &Graph,
    h: &CliqueSet,
    c: &VertexColoring,
) -> Result<VertexSet> {
    if c.colors().iter().any(|&x| x > 2) {
        return Err(Error::InvalidColoring("not a 2-coloring".into()));
    }
    let report = check_clique_coloring(g, h, c)?;
    if let Some(w) = report.witness {
        return Err(Error::InvalidColoring(format!("clique {w} is monochromatic")));
    }
    let class = |color: u32| -> Vec<Vertex> { (0..g.n()).filter(|&v| c.color(v) == color).collect() };
    let (ones, twos) = (class(1), class(2));
    let smaller = if ones.len() <= twos.len() { ones } else { twos };
    let set = VertexSet::from_unsorted(smaller);
    if set.len() > g.n() / 2 {
        return Err(Error::InternalInconsistency(format!(
            "transversal of size {} exceeds half of {}",
            set.len(),
            g.n()
        )));
    }
    if let Some(missed) = h
        .hyperedges()
        .find(|k| !k.iter().any(|&v| set.contains(v)))
    {
        return Err(Error::InternalInconsistency(format!(
            "transversal misses clique {missed}"
        )));
    }
    Ok(set)
}
