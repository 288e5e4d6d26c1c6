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

//! Exact minor containment for the three small targets K4, K5 and K3,3.
//!
//! The search assigns every vertex of a connected atom to one of `|V(H)|`
//! branch sets (for a connected host this loses no generality: unused
//! vertices can always be absorbed by an adjacent branch set). Before the
//! search the host is shrunk by minor-preserving reductions, split into
//! connected components and, for K5, along clique separators of order at
//! most three. Planar atoms are discarded for K5 and K3,3.

use std::collections::BTreeSet;
use std::fmt;

use super::planarity::is_planar;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

pub const MINOR_LIMIT: usize = 60;
pub const MINOR_HARD_CAP: usize = 200;
pub const MINOR_NODE_BUDGET: u64 = 20_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MinorTarget {
    K4,
    K5,
    K33,
}

impl MinorTarget {
    pub fn order(self) -> usize {
        match self {
            MinorTarget::K4 => 4,
            MinorTarget::K5 => 5,
            MinorTarget::K33 => 6,
        }
    }

    pub fn edges(self) -> Vec<(usize, usize)> {
        match self {
            MinorTarget::K33 => (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect(),
            _ => {
                let h = self.order();
                (0..h).flat_map(|a| (a + 1..h).map(move |b| (a, b))).collect()
            }
        }
    }

    fn is_complete(self) -> bool {
        !matches!(self, MinorTarget::K33)
    }
}

impl fmt::Display for MinorTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MinorTarget::K4 => "K4",
            MinorTarget::K5 => "K5",
            MinorTarget::K33 => "K33",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorWitness {
    pub branch_sets: Vec<VertexSet>,
}

impl MinorWitness {
    /// Checks disjointness, connectivity of every branch set and one host
    /// edge per target edge.
    pub fn verify(&self, g: &Graph, target: MinorTarget) -> bool {
        if self.branch_sets.len() != target.order() {
            return false;
        }
        let mut owner = vec![usize::MAX; g.n()];
        for (i, set) in self.branch_sets.iter().enumerate() {
            if set.is_empty() {
                return false;
            }
            for &v in set.iter() {
                if v >= g.n() || owner[v] != usize::MAX {
                    return false;
                }
                owner[v] = i;
            }
        }
        for (i, set) in self.branch_sets.iter().enumerate() {
            let start = set.as_slice()[0];
            let mut seen = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &w in g.neighbors(u) {
                    if owner[w] == i && !seen.contains(&w) {
                        seen.push(w);
                        stack.push(w);
                    }
                }
            }
            if seen.len() != set.len() {
                return false;
            }
        }
        target.edges().into_iter().all(|(a, b)| {
            self.branch_sets[a]
                .iter()
                .any(|&u| g.neighbors(u).iter().any(|&w| owner[w] == b))
        })
    }
}

impl fmt::Display for MinorWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.branch_sets.iter().map(|s| format!("{{{s}}}")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Minor search with the default size guard.
pub fn has_minor(g: &Graph, target: MinorTarget) -> Result<Option<MinorWitness>> {
    has_minor_with_limit(g, target, MINOR_LIMIT)
}

pub fn has_minor_with_limit(
    g: &Graph,
    target: MinorTarget,
    limit: usize,
) -> Result<Option<MinorWitness>> {
    guard(g, limit)?;
    if target != MinorTarget::K4 && is_planar(g) {
        return Ok(None);
    }
    let reduced = Reduced::new(g);
    let mut atoms = Vec::new();
    for comp in reduced.graph.connected_components() {
        let (sub, map) = reduced.graph.induced_subgraph(&comp)?;
        let groups: Vec<Vec<Vertex>> = map.old_ids().iter().map(|&v| reduced.groups[v].clone()).collect();
        match target {
            MinorTarget::K5 => split_clique_separators(sub, groups, 3, &mut atoms)?,
            MinorTarget::K33 => split_clique_separators(sub, groups, 2, &mut atoms)?,
            MinorTarget::K4 => atoms.push((sub, groups)),
        }
    }
    for (atom, groups) in atoms {
        if atom.n() < target.order() || (target != MinorTarget::K4 && is_planar(&atom)) {
            continue;
        }
        if let Some(blocks) = partition_search(&atom, target)? {
            let witness = MinorWitness {
                branch_sets: blocks
                    .iter()
                    .map(|b| VertexSet::from_unsorted(b.iter().flat_map(|&v| groups[v].iter().copied()).collect()))
                    .collect(),
            };
            if !witness.verify(g, target) {
                return Err(Error::InternalInconsistency(format!(
                    "lifted {target} minor witness fails verification"
                )));
            }
            return Ok(Some(witness));
        }
    }
    Ok(None)
}

/// Plain branch-set search on each connected component, without reductions,
/// splitting or planarity shortcuts.
pub fn find_minor_exhaustive(g: &Graph, target: MinorTarget) -> Result<Option<MinorWitness>> {
    guard(g, MINOR_LIMIT)?;
    for comp in g.connected_components() {
        let (sub, map) = g.induced_subgraph(&comp)?;
        if let Some(blocks) = partition_search(&sub, target)? {
            return Ok(Some(MinorWitness {
                branch_sets: blocks
                    .iter()
                    .map(|b| VertexSet::from_unsorted(b.iter().map(|&v| map.old(v)).collect()))
                    .collect(),
            }));
        }
    }
    Ok(None)
}

fn guard(g: &Graph, limit: usize) -> Result<()> {
    if limit > MINOR_HARD_CAP {
        return Err(Error::SizeGuard {
            operation: "minor search limit",
            n: limit,
            limit: MINOR_HARD_CAP,
        });
    }
    if g.n() > limit {
        return Err(Error::SizeGuard {
            operation: "minor search",
            n: g.n(),
            limit,
        });
    }
    Ok(())
}

/// Host after deleting vertices of degree at most one and suppressing
/// vertices of degree two; `groups[v]` lists the original vertices merged
/// into reduced vertex `v`.
pub(crate) struct Reduced {
    pub(crate) graph: Graph,
    groups: Vec<Vec<Vertex>>,
}

impl Reduced {
    pub(crate) fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut adj: Vec<BTreeSet<Vertex>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
        let mut groups: Vec<Vec<Vertex>> = (0..n).map(|v| vec![v]).collect();
        let mut alive = vec![true; n];
        let mut changed = true;
        while changed {
            changed = false;
            for v in 0..n {
                if !alive[v] || adj[v].len() > 2 {
                    continue;
                }
                let nbrs: Vec<Vertex> = adj[v].iter().copied().collect();
                for &w in &nbrs {
                    adj[w].remove(&v);
                }
                alive[v] = false;
                adj[v].clear();
                if let [a, b] = nbrs[..] {
                    let moved = std::mem::take(&mut groups[v]);
                    groups[a].extend(moved);
                    adj[a].insert(b);
                    adj[b].insert(a);
                }
                changed = true;
            }
        }
        let keep: Vec<Vertex> = (0..n).filter(|&v| alive[v]).collect();
        let mut index = vec![usize::MAX; n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let new_adj = keep
            .iter()
            .map(|&v| adj[v].iter().map(|&w| index[w]).collect())
            .collect();
        let new_groups = keep
            .iter()
            .map(|&v| {
                let mut grp = std::mem::take(&mut groups[v]);
                grp.sort_unstable();
                grp
            })
            .collect();
        Reduced {
            graph: Graph::from_sorted_adjacency(new_adj),
            groups: new_groups,
        }
    }
}

type Atom = (Graph, Vec<Vec<Vertex>>);

fn split_clique_separators(
    g: Graph,
    groups: Vec<Vec<Vertex>>,
    max_order: usize,
    out: &mut Vec<Atom>,
) -> Result<()> {
    let mut work = vec![(g, groups)];
    while let Some((g, groups)) = work.pop() {
        match find_clique_separator(&g, max_order) {
            None => out.push((g, groups)),
            Some(sep) => {
                for comp in g.components_avoiding(&sep) {
                    let mut part = comp.into_vec();
                    part.extend_from_slice(&sep);
                    let (sub, map) = g.induced_subgraph(&VertexSet::from_unsorted(part))?;
                    let sub_groups = map.old_ids().iter().map(|&v| groups[v].clone()).collect();
                    work.push((sub, sub_groups));
                }
            }
        }
    }
    Ok(())
}

fn find_clique_separator(g: &Graph, max_order: usize) -> Option<Vec<Vertex>> {
    let separates = |s: &[Vertex]| g.components_avoiding(s).len() > 1;
    for v in 0..g.n() {
        if separates(&[v]) {
            return Some(vec![v]);
        }
    }
    if max_order < 2 {
        return None;
    }
    for (u, v) in g.edges() {
        if separates(&[u, v]) {
            return Some(vec![u, v]);
        }
    }
    if max_order < 3 {
        return None;
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

/// Branch-set partition search on a connected graph with at most 64
/// vertices. Returns the branch sets in target order.
fn partition_search(g: &Graph, target: MinorTarget) -> Result<Option<Vec<Vec<Vertex>>>> {
    let n = g.n();
    let h = target.order();
    if n < h || g.m() < target.edges().len() {
        return Ok(None);
    }
    if n > 64 {
        return Err(Error::SizeGuard {
            operation: "minor search atom",
            n,
            limit: 64,
        });
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |acc, &w| acc | (1 << w)))
        .collect();
    let mut search = PartitionSearch {
        adj,
        order: g.bfs_order(0),
        h,
        complete: target.is_complete(),
        blocks: vec![0; h],
        nodes: 0,
    };
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    if !search.descend(0, 0, full)? {
        return Ok(None);
    }
    let mut blocks: Vec<u64> = search.blocks.clone();
    if !search.complete {
        let sides = search.k33_sides().expect("leaf accepted only with a bipartition");
        blocks = sides.iter().map(|&i| search.blocks[i]).collect();
    }
    Ok(Some(
        blocks
            .into_iter()
            .map(|mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect())
            .collect(),
    ))
}

struct PartitionSearch {
    adj: Vec<u64>,
    order: Vec<Vertex>,
    h: usize,
    complete: bool,
    blocks: Vec<u64>,
    nodes: u64,
}

impl PartitionSearch {
    fn descend(&mut self, i: usize, used: usize, unassigned: u64) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > MINOR_NODE_BUDGET {
            return Err(Error::SearchBudget(MINOR_NODE_BUDGET));
        }
        if i == self.order.len() {
            return Ok(used == self.h && (self.complete || self.k33_sides().is_some()));
        }
        if used + (self.order.len() - i) < self.h {
            return Ok(false);
        }
        let bit = 1u64 << self.order[i];
        let rest = unassigned & !bit;
        for b in 0..(used + 1).min(self.h) {
            self.blocks[b] |= bit;
            let now_used = used.max(b + 1);
            if self.feasible(now_used, rest) && self.descend(i + 1, now_used, rest)? {
                return Ok(true);
            }
            self.blocks[b] &= !bit;
        }
        Ok(false)
    }

    fn neighborhood(&self, mask: u64) -> u64 {
        let mut acc = 0;
        let mut rest = mask;
        while rest != 0 {
            acc |= self.adj[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        acc & !mask
    }

    fn connected_within(&self, mask: u64, allowed: u64) -> bool {
        let mut reach = mask & mask.wrapping_neg();
        loop {
            let next = (reach | self.neighborhood(reach)) & allowed;
            if next == reach {
                return mask & !reach == 0;
            }
            reach = next;
        }
    }

    fn feasible(&self, used: usize, unassigned: u64) -> bool {
        for b in 0..used {
            let block = self.blocks[b];
            if !self.connected_within(block, block | unassigned) {
                return false;
            }
            let nb = self.neighborhood(block);
            if nb & unassigned != 0 {
                continue;
            }
            let touching = (0..used).filter(|&c| c != b && nb & self.blocks[c] != 0).count();
            let needed = if self.complete { self.h - 1 } else { 3 };
            if touching < needed {
                return false;
            }
        }
        true
    }

    fn k33_sides(&self) -> Option<[usize; 6]> {
        let touch = |a: usize, b: usize| self.neighborhood(self.blocks[a]) & self.blocks[b] != 0;
        for x in 1..6 {
            for y in x + 1..6 {
                let left = [0, x, y];
                let right: Vec<usize> = (1..6).filter(|&c| c != x && c != y).collect();
                if left.iter().all(|&a| right.iter().all(|&b| touch(a, b))) {
                    return Some([0, x, y, right[0], right[1], right[2]]);
                }
            }
        }
        None
    }
}
