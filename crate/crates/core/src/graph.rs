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

//! Simple undirected graphs on dense vertex ids `0..n`.
//!
//! A [`Graph`] never changes after construction. Operations that would
//! mutate it return a new graph together with a [`Relabel`] map so results
//! computed on the smaller graph can be lifted back.

use std::collections::hash_map::DefaultHasher;
use std::collections::VecDeque;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// A simple undirected graph with sorted, duplicate-free adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

/// Sorted list of distinct vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<Vertex>);

/// Correspondence between the vertices of a subgraph and its parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabel {
    old_of_new: Vec<Vertex>,
    new_of_old: Vec<Option<Vertex>>,
}

impl Graph {
    /// Graph on `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Repeated edges are merged; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::Precondition(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Graph { adj, m })
    }

    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<Vertex>>) -> Self {
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let g = Graph { adj, m };
        debug_assert!(g.validate().is_ok());
        g
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| (0..n).filter(|&u| u != v).collect())
            .collect();
        Graph::from_sorted_adjacency(adj)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    pub fn degree(&self, v: Vertex) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    pub fn max_degree(&self) -> Result<usize> {
        self.adj.iter().map(Vec::len).max().ok_or(Error::EmptyGraph)
    }

    pub fn min_degree(&self) -> Result<usize> {
        self.adj.iter().map(Vec::len).min().ok_or(Error::EmptyGraph)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn closed_neighborhood(&self, v: Vertex) -> VertexSet {
        let mut s = self.adj[v].clone();
        let pos = s.binary_search(&v).unwrap_err();
        s.insert(pos, v);
        VertexSet(s)
    }

    /// Whether every pair in `s` is adjacent.
    pub fn is_clique(&self, s: &[Vertex]) -> bool {
        s.iter()
            .enumerate()
            .all(|(i, &u)| s[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Subgraph induced by `s`. New vertex `i` corresponds to `s[i]`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Relabel)> {
        if let Some(&bad) = s.0.iter().find(|&&v| v >= self.n()) {
            return Err(Error::VertexOutOfRange { vertex: bad, n: self.n() });
        }
        let relabel = Relabel::from_kept(self.n(), s.0.clone());
        let adj = s
            .0
            .iter()
            .map(|&old| {
                self.adj[old]
                    .iter()
                    .filter_map(|&w| relabel.new_of_old[w])
                    .collect()
            })
            .collect();
        Ok((Graph::from_sorted_adjacency(adj), relabel))
    }

    pub fn delete_vertex(&self, v: Vertex) -> Result<(Graph, Relabel)> {
        self.check_vertex(v)?;
        let keep = VertexSet((0..self.n()).filter(|&u| u != v).collect());
        self.induced_subgraph(&keep)
    }

    /// Connected components, each sorted, listed by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_avoiding(&[])
    }

    /// Components of the graph with the vertices in `removed` deleted,
    /// reported in the coordinates of `self`.
    pub fn components_avoiding(&self, removed: &[Vertex]) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = vec![false; n];
        for &r in removed {
            seen[r] = true;
        }
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(VertexSet(comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.connected_components().len() == 1
    }

    /// Vertices in breadth-first order from `start`, restricted to its component.
    pub fn bfs_order(&self, start: Vertex) -> Vec<Vertex> {
        let mut seen = vec![false; self.n()];
        let mut order = vec![start];
        seen[start] = true;
        let mut i = 0;
        while i < order.len() {
            let u = order[i];
            i += 1;
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
        order
    }

    /// Checks the representation invariants: no self-loops, symmetric,
    /// sorted and duplicate-free neighbor lists, consistent edge count.
    pub fn validate(&self) -> std::result::Result<(), String> {
        let n = self.n();
        let mut degree_sum = 0;
        for (v, list) in self.adj.iter().enumerate() {
            degree_sum += list.len();
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return Err(format!("neighbors of {v} not sorted or duplicated"));
            }
            for &w in list {
                if w >= n {
                    return Err(format!("neighbor {w} of {v} out of range"));
                }
                if w == v {
                    return Err(format!("self-loop at {v}"));
                }
                if self.adj[w].binary_search(&v).is_err() {
                    return Err(format!("edge {v}-{w} not symmetric"));
                }
            }
        }
        if degree_sum != 2 * self.m {
            return Err(format!("edge count {} but degree sum {degree_sum}", self.m));
        }
        Ok(())
    }

    /// Stable hash of the canonical edge list.
    pub fn fingerprint(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.n().hash(&mut h);
        for e in self.edges() {
            e.hash(&mut h);
        }
        h.finish()
    }
}

impl VertexSet {
    /// Validates sortedness, distinctness and range against a graph order `n`.
    pub fn new(vertices: Vec<Vertex>, n: usize) -> Result<Self> {
        if vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidVertexSet(
                "vertices must be sorted and distinct".into(),
            ));
        }
        if let Some(&bad) = vertices.last().filter(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: bad, n });
        }
        Ok(VertexSet(vertices))
    }

    /// Sorts and deduplicates.
    pub fn from_unsorted(mut vertices: Vec<Vertex>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        VertexSet(vertices)
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Vertex> {
        self.0.iter()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = &'a Vertex;
    type IntoIter = std::slice::Iter<'a, Vertex>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl Relabel {
    fn from_kept(parent_n: usize, kept: Vec<Vertex>) -> Self {
        let mut new_of_old = vec![None; parent_n];
        for (i, &old) in kept.iter().enumerate() {
            new_of_old[old] = Some(i);
        }
        Relabel {
            old_of_new: kept,
            new_of_old,
        }
    }

    /// Parent vertex of subgraph vertex `new`.
    #[inline]
    pub fn old(&self, new: Vertex) -> Vertex {
        self.old_of_new[new]
    }

    /// Subgraph vertex of parent vertex `old`, if it was kept.
    #[inline]
    pub fn new_id(&self, old: Vertex) -> Option<Vertex> {
        self.new_of_old.get(old).copied().flatten()
    }

    pub fn old_ids(&self) -> &[Vertex] {
        &self.old_of_new
    }

    pub fn len(&self) -> usize {
        self.old_of_new.len()
    }

    pub fn is_empty(&self) -> bool {
        self.old_of_new.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, wagner, wheel};

    #[test]
    fn degrees() {
        assert_eq!(complete(4).degree(0).unwrap(), 3);
        let c5 = cycle(5).unwrap();
        assert!((0..5).all(|v| c5.degree(v).unwrap() == 2));
        let w5 = wheel(5).unwrap();
        assert_eq!(w5.degree(0).unwrap(), 5);
        assert!(matches!(
            c5.degree(5),
            Err(Error::VertexOutOfRange { vertex: 5, n: 5 })
        ));
    }

    #[test]
    fn max_degree_examples() {
        assert_eq!(wheel(5).unwrap().max_degree().unwrap(), 5);
        assert_eq!(wagner().max_degree().unwrap(), 3);
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(g.max_degree().unwrap(), 1);
        assert_eq!(Graph::empty(0).max_degree(), Err(Error::EmptyGraph));
    }

    #[test]
    fn induced_subgraph_examples() {
        let (k3, map) = complete(4)
            .induced_subgraph(&VertexSet::new(vec![0, 1, 2], 4).unwrap())
            .unwrap();
        assert_eq!(k3, complete(3));
        assert_eq!(map.old_ids(), &[0, 1, 2]);

        let (path, _) = cycle(5)
            .unwrap()
            .induced_subgraph(&VertexSet::new(vec![0, 1, 2], 5).unwrap())
            .unwrap();
        assert_eq!(path.m(), 2);
        assert_eq!(path.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);

        let w5 = wheel(5).unwrap();
        let (same, _) = w5.induced_subgraph(&w5.closed_neighborhood(0)).unwrap();
        assert_eq!(same, w5);

        assert!(complete(3)
            .induced_subgraph(&VertexSet::from_unsorted(vec![0, 7]))
            .is_err());
    }

    #[test]
    fn delete_vertex_examples() {
        assert_eq!(complete(4).delete_vertex(2).unwrap().0, complete(3));
        let (p4, map) = cycle(5).unwrap().delete_vertex(0).unwrap();
        assert_eq!(p4.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(map.old(0), 1);
        assert_eq!(map.new_id(0), None);
        assert_eq!(wheel(5).unwrap().delete_vertex(0).unwrap().0, cycle(5).unwrap());
        assert!(complete(3).delete_vertex(3).is_err());
    }

    #[test]
    fn components() {
        let two = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let comps = two.connected_components();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 3));
        assert_eq!(cycle(6).unwrap().connected_components().len(), 1);
        let isolated = Graph::empty(3).connected_components();
        assert_eq!(
            isolated,
            vec![VertexSet(vec![0]), VertexSet(vec![1]), VertexSet(vec![2])]
        );
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(Graph::from_edges(3, [(0, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        let merged = Graph::from_edges(3, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(merged.m(), 1);
    }

    #[test]
    fn vertex_set_validation() {
        assert!(VertexSet::new(vec![0, 2, 1], 3).is_err());
        assert!(VertexSet::new(vec![0, 0], 3).is_err());
        assert!(VertexSet::new(vec![0, 3], 3).is_err());
        assert_eq!(VertexSet::from_unsorted(vec![3, 1, 3]).as_slice(), &[1, 3]);
    }
}
