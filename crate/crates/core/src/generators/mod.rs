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

//! Deterministic constructions of the graph families used throughout the
//! crate: cycles, wheels, cycle powers, the Wagner graph, random 2-trees,
//! random Apollonian triangulations, clique-sums of triangulations and
//! Wagner graphs, line graphs, prisms, and two fixed counterexamples.

pub mod corpus;
mod rng;
mod wagner_sum;

pub use rng::Lcg64;
pub use wagner_sum::{
    gen_wagner_sum, parse_blueprint, write_blueprint, Blueprint, BlueprintPiece, PieceKind,
    WagnerSum,
};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A graph family together with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenSpec {
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    Wheel { n: usize },
    CyclePower { n: usize, k: usize },
    Wagner,
    TwoTree { n: usize, seed: u64 },
    Apollonian { n: usize, seed: u64 },
    WagnerSum { blueprint: Blueprint, seed: u64 },
    LineGraph { base: Box<GenSpec> },
    Prism { k: usize },
    Figure5,
    LK6,
}

/// Which claw-free planar family [`gen_claw_free_planar`] builds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClawFreePlanarKind {
    /// Square of the cycle `C_n`.
    CyclePower2,
    /// Line graph of the prism on `n` vertices.
    LineOfPrism,
}

pub fn gen(spec: &GenSpec) -> Result<Graph> {
    match spec {
        GenSpec::Cycle { n } => cycle(*n),
        GenSpec::Complete { n } => Ok(complete(*n)),
        GenSpec::CompleteBipartite { a, b } => Ok(complete_bipartite(*a, *b)),
        GenSpec::Wheel { n } => wheel(*n),
        GenSpec::CyclePower { n, k } => cycle_power(*n, *k),
        GenSpec::Wagner => Ok(wagner()),
        GenSpec::TwoTree { n, seed } => gen_two_tree(*n, *seed),
        GenSpec::Apollonian { n, seed } => gen_apollonian(*n, *seed),
        GenSpec::WagnerSum { blueprint, seed } => Ok(gen_wagner_sum(blueprint, *seed)?.graph),
        GenSpec::LineGraph { base } => Ok(line_graph(&gen(base)?)),
        GenSpec::Prism { k } => prism(*k),
        GenSpec::Figure5 => Ok(figure5()),
        GenSpec::LK6 => Ok(l_k6()),
    }
}

pub fn complete(n: usize) -> Graph {
    Graph::complete(n)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Generator(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)));
    Graph::from_edges(a + b, edges).expect("bipartite edges are in range")
}

/// `W_n`: hub 0 joined to the rim cycle `1..=n`.
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Generator(format!("wheel needs n >= 3, got {n}")));
    }
    let rim = (0..n).map(|i| (1 + i, 1 + (i + 1) % n));
    let spokes = (1..=n).map(|i| (0, i));
    Graph::from_edges(n + 1, rim.chain(spokes))
}

/// `C_n^k`: each vertex joined to every vertex within cyclic distance `k`.
pub fn cycle_power(n: usize, k: usize) -> Result<Graph> {
    if k < 1 || 2 * k >= n {
        return Err(Error::Generator(format!(
            "cycle power needs k >= 1 and 2k < n, got n={n}, k={k}"
        )));
    }
    Graph::from_edges(n, (0..n).flat_map(|i| (1..=k).map(move |d| (i, (i + d) % n))))
}

/// The Wagner graph `V8`: the 8-cycle plus its four antipodal chords.
pub fn wagner() -> Graph {
    let edges = (0..8).flat_map(|i| [(i, (i + 1) % 8)]).chain((0..4).map(|i| (i, i + 4)));
    Graph::from_edges(8, edges).expect("wagner edges are in range")
}

/// The prism `CL_k`: cycles on `0..k` and `k..2k` joined by rungs `(i, k+i)`.
pub fn prism(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::Generator(format!("prism needs k >= 3, got {k}")));
    }
    let outer = (0..k).map(|i| (i, (i + 1) % k));
    let inner = (0..k).map(|i| (k + i, k + (i + 1) % k));
    let rungs = (0..k).map(|i| (i, k + i));
    Graph::from_edges(2 * k, outer.chain(inner).chain(rungs))
}

/// Line graph: vertex `i` is the `i`-th edge of `g` in lexicographic order.
pub fn line_graph(g: &Graph) -> Graph {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut incident = vec![Vec::new(); g.n()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        incident[u].push(i);
        incident[v].push(i);
    }
    let pairs = incident.iter().flat_map(|list| {
        list.iter()
            .enumerate()
            .flat_map(move |(a, &x)| list[a + 1..].iter().map(move |&y| (x, y)))
    });
    Graph::from_edges(edges.len(), pairs).expect("line graph edges are in range")
}

/// The 9-vertex K4-minor-free graph with claws that is not 2-clique-colorable.
pub fn figure5() -> Graph {
    const EDGES: [(usize, usize); 12] = [
        (0, 1),
        (0, 2),
        (1, 3),
        (2, 3),
        (2, 4),
        (3, 4),
        (2, 5),
        (5, 7),
        (4, 7),
        (4, 8),
        (6, 8),
        (3, 6),
    ];
    Graph::from_edges(9, EDGES).expect("fixture edges are in range")
}

/// `L(K6)`: 15 vertices, contains `K5`, not 2-clique-colorable.
pub fn l_k6() -> Graph {
    line_graph(&complete(6))
}

/// Random 2-tree: start from a triangle and attach each new vertex to a
/// uniformly chosen existing edge (edges kept in creation order).
pub fn gen_two_tree(n: usize, seed: u64) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Generator(format!("2-tree needs n >= 3, got {n}")));
    }
    let mut rng = Lcg64::new(seed);
    let mut edges = vec![(0, 1), (0, 2), (1, 2)];
    for v in 3..n {
        let (a, b) = edges[rng.below(edges.len())];
        edges.push((a, v));
        edges.push((b, v));
    }
    Graph::from_edges(n, edges)
}

/// Random Apollonian triangulation: start from `K4` and repeatedly insert a
/// vertex into a uniformly chosen face, splitting it into three.
pub fn gen_apollonian(n: usize, seed: u64) -> Result<Graph> {
    if n < 4 {
        return Err(Error::Generator(format!(
            "apollonian triangulation needs n >= 4, got {n}"
        )));
    }
    let mut rng = Lcg64::new(seed);
    let mut edges: Vec<(usize, usize)> =
        vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let mut faces = vec![(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)];
    for v in 4..n {
        let i = rng.below(faces.len());
        let (a, b, c) = faces[i];
        faces[i] = (a, b, v);
        faces.push((a, c, v));
        faces.push((b, c, v));
        edges.extend([(a, v), (b, v), (c, v)]);
    }
    Graph::from_edges(n, edges)
}

/// Claw-free planar test instances: `C_n^2` (planar only for even `n`, so
/// odd `n` is rejected) or the line graph of the prism on `n` vertices.
pub fn gen_claw_free_planar(kind: ClawFreePlanarKind, n: usize) -> Result<Graph> {
    match kind {
        ClawFreePlanarKind::CyclePower2 => {
            if n < 8 || n % 2 == 1 {
                return Err(Error::Generator(format!(
                    "C_n^2 is planar only for even n; need even n >= 8, got {n}"
                )));
            }
            cycle_power(n, 2)
        }
        ClawFreePlanarKind::LineOfPrism => {
            if n < 6 || n % 2 == 1 {
                return Err(Error::Generator(format!(
                    "prism line graph needs even n >= 6, got {n}"
                )));
            }
            Ok(line_graph(&prism(n / 2)?))
        }
    }
}

/// The octahedron `K_{2,2,2}`; vertex `i` is opposite `i + 3`.
pub fn octahedron() -> Graph {
    let pairs = (0..6usize).flat_map(|u| (u + 1..6).map(move |v| (u, v)));
    Graph::from_edges(6, pairs.filter(|&(u, v)| v != u + 3)).expect("octahedron edges are in range")
}

/// The icosahedron: apex 0, upper ring 1..=5, lower ring 6..=10, apex 11.
pub fn icosahedron() -> Graph {
    let mut edges = Vec::with_capacity(30);
    for i in 0..5 {
        let (up, up_next) = (1 + i, 1 + (i + 1) % 5);
        let (low, low_next) = (6 + i, 6 + (i + 1) % 5);
        edges.extend([(0, up), (up, up_next), (low, low_next), (low, 11), (up, low), (up, low_next)]);
    }
    Graph::from_edges(12, edges).expect("icosahedron edges are in range")
}

/// Line graph of a chain of random prisms joined at cut vertices of degree
/// four, either by identifying two vertices (after deleting one edge on each
/// side) or by a bridge. The host is planar with every degree-4 vertex a
/// cut vertex, so the line graph is claw-free and planar; each joint yields
/// a 4-clique.
pub fn gen_block_line_graph(blocks: usize, seed: u64) -> Result<Graph> {
    if blocks == 0 {
        return Err(Error::Generator("need at least one block".into()));
    }
    let mut rng = Lcg64::new(seed);
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut n = 0;
    for b in 0..blocks {
        let k = 3 + rng.below(4);
        let block = prism(k)?;
        let host = Graph::from_edges(n, edges.iter().copied())?;
        let shared = rng.below(2) == 0;
        let mut cut_edges: Vec<(usize, usize)> = Vec::new();
        if b > 0 && shared {
            for &(p, q) in &edges {
                if host.neighbors(p).len() == 3 && host.neighbors(q).len() == 3 {
                    let without = Graph::from_edges(n, edges.iter().copied().filter(|&e| e != (p, q)))?;
                    if without.is_connected() {
                        cut_edges.push((p, q));
                    }
                }
            }
        }
        if b == 0 {
            edges.extend(block.edges());
            n = block.n();
        } else if !cut_edges.is_empty() {
            let (p, q) = cut_edges[rng.below(cut_edges.len())];
            edges.retain(|&e| e != (p, q));
            let map = |i: usize| if i == 0 { p } else { n + i - 1 };
            edges.extend(block.edges().filter(|&e| e != (0, 1)).map(|(x, y)| {
                let (a, b) = (map(x), map(y));
                (a.min(b), a.max(b))
            }));
            n += block.n() - 1;
        } else {
            let cubic: Vec<usize> = (0..n).filter(|&v| host.neighbors(v).len() == 3).collect();
            let p = cubic[rng.below(cubic.len())];
            edges.extend(block.edges().map(|(x, y)| (n + x, n + y)));
            edges.push((p, n));
            n += block.n();
        }
    }
    Ok(line_graph(&Graph::from_edges(n, edges)?))
}
