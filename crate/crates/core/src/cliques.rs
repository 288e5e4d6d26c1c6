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

//! The clique hypergraph of a graph and clique-coloring validity.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

/// All maximal cliques of a graph, each sorted, listed lexicographically.
///
/// Isolated vertices appear as singleton cliques so that every vertex is
/// covered; singletons never constrain a coloring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueSet {
    fingerprint: u64,
    cliques: Vec<VertexSet>,
}

/// An assignment of colors `1..=k` to the vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexColoring {
    colors: Vec<u32>,
    k: u32,
}

/// Outcome of checking a coloring against the clique hypergraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidityReport {
    /// First monochromatic maximal clique of size at least two, if any.
    pub witness: Option<VertexSet>,
}

impl CliqueSet {
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn cliques(&self) -> &[VertexSet] {
        &self.cliques
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    /// Cliques with at least two vertices: the constraining hyperedges.
    pub fn hyperedges(&self) -> impl Iterator<Item = &VertexSet> + '_ {
        self.cliques.iter().filter(|c| c.len() >= 2)
    }
}

impl VertexColoring {
    /// Builds a coloring with palette `1..=k`, rejecting entries outside it.
    pub fn new(colors: Vec<u32>, k: u32) -> Result<Self> {
        if let Some((v, &c)) = colors
            .iter()
            .enumerate()
            .find(|(_, &c)| c == 0 || c > k)
        {
            return Err(Error::InvalidColoring(format!(
                "vertex {v} has color {c}, outside 1..={k}"
            )));
        }
        Ok(VertexColoring { colors, k })
    }

    /// Palette size taken as the largest color present.
    pub fn from_colors(colors: Vec<u32>) -> Result<Self> {
        let k = colors.iter().copied().max().unwrap_or(0);
        VertexColoring::new(colors, k)
    }

    #[inline]
    pub fn color(&self, v: Vertex) -> u32 {
        self.colors[v]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colors actually used.
    pub fn colors_used(&self) -> usize {
        let mut seen: Vec<u32> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }
}

impl fmt::Display for VertexColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.colors.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.witness.is_none()
    }
}

impl fmt::Display for ValidityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => f.write_str("valid"),
            Some(w) => write!(f, "invalid {w}"),
        }
    }
}

/// Enumerates the maximal cliques of `g` (Bron–Kerbosch with Tomita pivoting
/// over a degeneracy ordering).
pub fn maximal_cliques(g: &Graph) -> CliqueSet {
    let order = degeneracy_order(g);
    let mut position = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut out = Vec::new();
    let mut r = Vec::new();
    for &v in &order {
        let (p, x): (Vec<_>, Vec<_>) = g
            .neighbors(v)
            .iter()
            .partition(|&&w| position[w] > position[v]);
        r.push(v);
        expand(g, &mut r, p, x, &mut out);
        r.pop();
    }
    finish(g, out)
}

/// Maximal cliques of `g` that contain `v`, sorted lexicographically.
pub fn cliques_containing(g: &Graph, v: Vertex) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let mut r = vec![v];
    expand(g, &mut r, g.neighbors(v).to_vec(), Vec::new(), &mut out);
    let mut cliques: Vec<VertexSet> = out.into_iter().map(VertexSet::from_unsorted).collect();
    cliques.sort();
    cliques
}

/// Maximal cliques of `g` that meet `s`, deduplicated and sorted.
pub fn cliques_meeting(g: &Graph, s: &[Vertex]) -> Vec<VertexSet> {
    let mut all: Vec<VertexSet> = s.iter().flat_map(|&v| cliques_containing(g, v)).collect();
    all.sort();
    all.dedup();
    all
}

fn finish(g: &Graph, raw: Vec<Vec<Vertex>>) -> CliqueSet {
    let mut cliques: Vec<VertexSet> = raw.into_iter().map(VertexSet::from_unsorted).collect();
    cliques.sort();
    CliqueSet {
        fingerprint: g.fingerprint(),
        cliques,
    }
}

fn expand(
    g: &Graph,
    r: &mut Vec<Vertex>,
    mut p: Vec<Vertex>,
    mut x: Vec<Vertex>,
    out: &mut Vec<Vec<Vertex>>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    p.sort_unstable();
    x.sort_unstable();
    let pivot = p
        .iter()
        .chain(x.iter())
        .copied()
        .max_by_key(|&u| (intersect_count(&p, g.neighbors(u)), std::cmp::Reverse(u)))
        .expect("p is non-empty");
    let candidates: Vec<Vertex> = p
        .iter()
        .copied()
        .filter(|&v| !g.has_edge(pivot, v))
        .collect();
    for v in candidates {
        let nv = g.neighbors(v);
        let next_p = intersect(&p, nv);
        let next_x = intersect(&x, nv);
        r.push(v);
        expand(g, r, next_p, next_x, out);
        r.pop();
        let pos = p.binary_search(&v).expect("candidate drawn from p");
        p.remove(pos);
        let pos = x.binary_search(&v).unwrap_err();
        x.insert(pos, v);
    }
}

fn intersect(a: &[Vertex], b: &[Vertex]) -> Vec<Vertex> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn intersect_count(a: &[Vertex], b: &[Vertex]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Smallest-last vertex ordering; ties broken by smallest id.
pub fn degeneracy_order(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|v| g.neighbors(v).len()).collect();
    let max_deg = degree.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<std::collections::BTreeSet<Vertex>> =
        vec![std::collections::BTreeSet::new(); max_deg + 1];
    for v in 0..n {
        buckets[degree[v]].insert(v);
    }
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut d: usize = 0;
    for _ in 0..n {
        d = d.saturating_sub(1);
        while buckets[d].is_empty() {
            d += 1;
        }
        let v = *buckets[d].iter().next().expect("bucket non-empty");
        buckets[d].remove(&v);
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                buckets[degree[w]].remove(&w);
                degree[w] -= 1;
                buckets[degree[w]].insert(w);
            }
        }
    }
    order
}

/// ω(g): size of a largest clique.
pub fn clique_number(g: &Graph) -> Result<usize> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(maximal_cliques(g)
        .cliques()
        .iter()
        .map(VertexSet::len)
        .max()
        .unwrap_or(1))
}

/// Checks that no maximal clique of size at least two is monochromatic.
/// The witness is the lexicographically first violating clique.
pub fn check_clique_coloring(
    g: &Graph,
    h: &CliqueSet,
    c: &VertexColoring,
) -> Result<ValidityReport> {
    if c.len() != g.n() {
        return Err(Error::ColoringLength {
            got: c.len(),
            expected: g.n(),
        });
    }
    if h.fingerprint() != g.fingerprint() {
        return Err(Error::Precondition(
            "clique set was computed for a different graph".into(),
        ));
    }
    Ok(ValidityReport {
        witness: first_monochromatic(h.hyperedges(), c.colors()).cloned(),
    })
}

/// Convenience wrapper that enumerates the cliques itself.
pub fn is_clique_coloring(g: &Graph, c: &VertexColoring) -> Result<ValidityReport> {
    check_clique_coloring(g, &maximal_cliques(g), c)
}

pub(crate) fn first_monochromatic<'a, I>(cliques: I, colors: &[u32]) -> Option<&'a VertexSet>
where
    I: IntoIterator<Item = &'a VertexSet>,
{
    cliques
        .into_iter()
        .find(|k| k.len() >= 2 && is_monochromatic(k.as_slice(), colors))
}

#[inline]
pub(crate) fn is_monochromatic(clique: &[Vertex], colors: &[u32]) -> bool {
    let first = colors[clique[0]];
    clique[1..].iter().all(|&v| colors[v] == first)
}
