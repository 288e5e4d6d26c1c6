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

//! Membership tests for the graph classes the colorers rely on.

mod minor;
mod planarity;

use std::fmt;

pub use minor::{
    find_minor_exhaustive, has_minor, has_minor_with_limit, MinorTarget, MinorWitness,
    MINOR_HARD_CAP, MINOR_LIMIT, MINOR_NODE_BUDGET,
};
pub use planarity::is_planar;

use crate::cliques::clique_number;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClawWitness {
    pub center: Vertex,
    pub leaves: [Vertex; 3],
}

impl fmt::Display for ClawWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.leaves;
        write!(f, "{} {} {} {}", self.center, a, b, c)
    }
}

/// First induced claw in lexicographic (center, leaves) order.
pub fn find_claw(g: &Graph) -> Option<ClawWitness> {
    for v in 0..g.n() {
        let nb = g.neighbors(v);
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                for &c in &nb[j + 1..] {
                    if !g.has_edge(a, c) && !g.has_edge(b, c) {
                        return Some(ClawWitness {
                            center: v,
                            leaves: [a, b, c],
                        });
                    }
                }
            }
        }
    }
    None
}

/// Series-parallel reduction: delete vertices of degree at most one and
/// suppress vertices of degree two until nothing changes.
pub fn is_k4_minor_free_fast(g: &Graph) -> bool {
    minor::Reduced::new(g).graph.n() == 0
}

/// Construction order of a 2-tree: `v1 v2 v3` is a triangle and every later
/// vertex has exactly two earlier neighbours, which are adjacent.
pub fn recognize_2tree(g: &Graph) -> Result<Option<Vec<Vertex>>> {
    let n = g.n();
    if n < 3 {
        return Err(Error::Precondition(format!("2-tree recognition needs n >= 3, got {n}")));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.m() != 2 * n - 3 {
        return Ok(None);
    }
    let mut degree: Vec<usize> = (0..n).map(|v| g.neighbors(v).len()).collect();
    let mut removed = vec![false; n];
    let mut peeled = Vec::with_capacity(n);
    let mut candidates: std::collections::BTreeSet<Vertex> =
        (0..n).filter(|&v| degree[v] == 2).collect();
    while peeled.len() + 3 < n {
        let pick = candidates.iter().copied().find(|&v| {
            let live: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&w| !removed[w]).collect();
            live.len() == 2 && g.has_edge(live[0], live[1])
        });
        let Some(v) = pick else {
            return Ok(None);
        };
        candidates.remove(&v);
        removed[v] = true;
        peeled.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                degree[w] -= 1;
                if degree[w] == 2 {
                    candidates.insert(w);
                } else {
                    candidates.remove(&w);
                }
            }
        }
    }
    let base: Vec<Vertex> = (0..n).filter(|&v| !removed[v]).collect();
    if !g.is_clique(&base) {
        return Ok(None);
    }
    let mut order = base;
    order.extend(peeled.into_iter().rev());
    Ok(Some(order))
}

/// Maximal planarity: `m = 3n − 6` together with a planarity certificate.
pub fn is_plane_triangulation(g: &Graph) -> bool {
    let n = g.n();
    n >= 3 && g.m() == 3 * n - 6 && g.is_connected() && is_planar(g)
}

/// Isomorphism onto the canonical Wagner graph, as `map[g_vertex] =
/// canonical_vertex`.
pub fn is_wagner_graph(g: &Graph) -> Option<Vec<Vertex>> {
    if g.n() != 8 || (0..8).any(|v| g.neighbors(v).len() != 3) {
        return None;
    }
    let mut path = vec![0];
    let mut used = [false; 8];
    used[0] = true;
    hamiltonian_v8(g, &mut path, &mut used)
}

fn hamiltonian_v8(g: &Graph, path: &mut Vec<Vertex>, used: &mut [bool; 8]) -> Option<Vec<Vertex>> {
    if path.len() == 8 {
        let closes = g.has_edge(path[7], path[0]);
        if closes && (0..4).all(|i| g.has_edge(path[i], path[i + 4])) {
            let mut map = vec![0; 8];
            for (i, &v) in path.iter().enumerate() {
                map[v] = i;
            }
            return Some(map);
        }
        return None;
    }
    let last = *path.last().expect("path starts non-empty");
    for &w in g.neighbors(last) {
        if !used[w] {
            used[w] = true;
            path.push(w);
            if let Some(map) = hamiltonian_v8(g, path, used) {
                return Some(map);
            }
            path.pop();
            used[w] = false;
        }
    }
    None
}

/// Length of the cycle if `g` is a connected 2-regular graph of odd order.
pub fn is_odd_cycle(g: &Graph) -> Option<usize> {
    let n = g.n();
    (n >= 3 && n % 2 == 1 && (0..n).all(|v| g.neighbors(v).len() == 2) && g.is_connected())
        .then_some(n)
}

/// Whether `g` is the 5-wheel.
pub fn is_w5(g: &Graph) -> bool {
    if g.n() != 6 || g.m() != 10 {
        return false;
    }
    let Some(hub) = (0..6).find(|&v| g.neighbors(v).len() == 5) else {
        return false;
    };
    (0..6).all(|v| v == hub || g.neighbors(v).len() == 3)
        && g
            .delete_vertex(hub)
            .map(|(rim, _)| rim.is_connected())
            .unwrap_or(false)
}

/// Checks that no degree exceeds five and every degree-5 closed
/// neighbourhood induces a 5-wheel. Requires a claw-free input with clique
/// number at most three.
pub fn check_wheel_neighborhoods(g: &Graph) -> Result<bool> {
    if let Some(claw) = find_claw(g) {
        return Err(Error::Precondition(format!("graph has a claw: {claw}")));
    }
    let omega = clique_number(g)?;
    if omega > 3 {
        return Err(Error::Precondition(format!("clique number {omega} exceeds 3")));
    }
    for v in 0..g.n() {
        match g.neighbors(v).len() {
            d if d > 5 => return Ok(false),
            5 => {
                let (sub, _) = g.induced_subgraph(&g.closed_neighborhood(v))?;
                if !is_w5(&sub) {
                    return Ok(false);
                }
            }
            _ => {}
        }
    }
    Ok(true)
}

pub fn check_degree_at_most_six(g: &Graph) -> bool {
    (0..g.n()).all(|v| g.neighbors(v).len() <= 6)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecognitionReport {
    pub n: usize,
    pub m: usize,
    pub claw: Option<ClawWitness>,
    pub k4_minor_free: bool,
    /// `None` when the minor search exceeded its size guard or budget.
    pub k5_minor_free: Option<bool>,
    pub is_2tree: bool,
    pub is_plane_triangulation: bool,
    pub is_wagner: bool,
    pub odd_cycle: Option<usize>,
    pub max_degree: usize,
    pub clique_number: usize,
}

impl RecognitionReport {
    pub fn claw_free(&self) -> bool {
        self.claw.is_none()
    }
}

pub fn recognize(g: &Graph) -> Result<RecognitionReport> {
    recognize_with_limit(g, MINOR_LIMIT)
}

pub fn recognize_with_limit(g: &Graph, limit: usize) -> Result<RecognitionReport> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let k5_minor_free = if is_planar(g) {
        Some(true)
    } else {
        match has_minor_with_limit(g, MinorTarget::K5, limit) {
            Ok(w) => Some(w.is_none()),
            Err(Error::SizeGuard { .. } | Error::SearchBudget(_)) => None,
            Err(e) => return Err(e),
        }
    };
    let is_2tree = g.n() >= 3 && g.is_connected() && recognize_2tree(g)?.is_some();
    Ok(RecognitionReport {
        n: g.n(),
        m: g.m(),
        claw: find_claw(g),
        k4_minor_free: is_k4_minor_free_fast(g),
        k5_minor_free,
        is_2tree,
        is_plane_triangulation: is_plane_triangulation(g),
        is_wagner: is_wagner_graph(g).is_some(),
        odd_cycle: is_odd_cycle(g),
        max_degree: g.max_degree()?,
        clique_number: clique_number(g)?,
    })
}

impl fmt::Display for RecognitionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.n)?;
        writeln!(f, "m={}", self.m)?;
        writeln!(f, "claw_free={}", self.claw_free())?;
        if let Some(claw) = &self.claw {
            writeln!(f, "claw={claw}")?;
        }
        writeln!(f, "k4_minor_free={}", self.k4_minor_free)?;
        match self.k5_minor_free {
            Some(b) => writeln!(f, "k5_minor_free={b}")?,
            None => writeln!(f, "k5_minor_free=unknown")?,
        }
        writeln!(f, "is_2tree={}", self.is_2tree)?;
        writeln!(f, "is_plane_triangulation={}", self.is_plane_triangulation)?;
        writeln!(f, "is_wagner={}", self.is_wagner)?;
        writeln!(f, "is_odd_cycle={}", self.odd_cycle.is_some())?;
        if let Some(len) = self.odd_cycle {
            writeln!(f, "odd_cycle_length={len}")?;
        }
        writeln!(f, "max_degree={}", self.max_degree)?;
        writeln!(f, "clique_number={}", self.clique_number)
    }
}
