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

//! Named instance collections for the claw-free colorer.

use super::{
    cycle_power, gen_block_line_graph, gen_claw_free_planar, icosahedron, octahedron, wheel,
    ClawFreePlanarKind, Lcg64,
};
use crate::graph::{Graph, VertexSet};
use crate::recognition::is_odd_cycle;

#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub graph: Graph,
}

impl Instance {
    fn new(name: impl Into<String>, graph: Graph) -> Self {
        Instance {
            name: name.into(),
            graph,
        }
    }
}

/// `C_n^2` for even `n` in `8..=100` and line graphs of the prisms `CL_k`
/// for `k` in `3..=25`.
pub fn claw_free_planar_corpus() -> Vec<Instance> {
    let squares = (8..=100).step_by(2).map(|n| {
        let g = gen_claw_free_planar(ClawFreePlanarKind::CyclePower2, n).expect("even n >= 8");
        Instance::new(format!("C{n}^2"), g)
    });
    let prisms = (3..=25).map(|k| {
        let g = gen_claw_free_planar(ClawFreePlanarKind::LineOfPrism, 2 * k).expect("k >= 3");
        Instance::new(format!("L(CL{k})"), g)
    });
    squares.chain(prisms).collect()
}

/// Claw-free K5-minor-free instances with vertices of degree five and six
/// and 4-cliques: wheels, the octahedron and icosahedron, line graphs of
/// prism chains, and random induced subgraphs of these (claw-freeness is
/// hereditary and K5-minor-freeness is minor-closed). Instances with an
/// odd-cycle component of length at least five are skipped.
pub fn claw_free_structured_corpus(seed: u64) -> Vec<Instance> {
    let mut out = vec![
        Instance::new("W5", wheel(5).expect("n >= 3")),
        Instance::new("octahedron", octahedron()),
        Instance::new("icosahedron", icosahedron()),
        Instance::new("C8^2", cycle_power(8, 2).expect("2k < n")),
    ];
    for blocks in 1..=5 {
        for s in 0..4 {
            let g = gen_block_line_graph(blocks, seed.wrapping_add(s)).expect("blocks >= 1");
            out.push(Instance::new(format!("blocks{blocks}-s{s}"), g));
        }
    }
    let mut rng = Lcg64::new(seed);
    let hosts: Vec<Instance> = out.clone();
    for host in &hosts {
        for t in 0..6 {
            let n = host.graph.n();
            let target = (6 + rng.below(9)).min(n);
            let start = rng.below(n);
            let sub = random_connected_subset(&host.graph, start, target, &mut rng);
            let (g, _) = host.graph.induced_subgraph(&sub).expect("subset of the host");
            out.push(Instance::new(format!("{}-sub{t}", host.name), g));
        }
    }
    out.retain(|inst| {
        inst.graph.connected_components().iter().all(|c| {
            let (h, _) = inst.graph.induced_subgraph(c).expect("component");
            !is_odd_cycle(&h).is_some_and(|l| l >= 5)
        })
    });
    out
}

fn random_connected_subset(g: &Graph, start: usize, size: usize, rng: &mut Lcg64) -> VertexSet {
    let mut chosen = vec![start];
    let mut in_set = vec![false; g.n()];
    in_set[start] = true;
    while chosen.len() < size {
        let mut frontier: Vec<usize> = chosen
            .iter()
            .flat_map(|&v| g.neighbors(v).iter().copied())
            .filter(|&w| !in_set[w])
            .collect();
        frontier.sort_unstable();
        frontier.dedup();
        if frontier.is_empty() {
            break;
        }
        let w = frontier[rng.below(frontier.len())];
        in_set[w] = true;
        chosen.push(w);
    }
    VertexSet::from_unsorted(chosen)
}
