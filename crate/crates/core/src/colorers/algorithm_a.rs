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

//! Two colors for {claw, K5-minor}-free graphs other than odd cycles.
//!
//! Each connected component is colored recursively: small maximum degree
//! goes to the exact solver, a 5-wheel is colored directly, and otherwise a
//! vertex of degree five (clique number at most three) or a vertex in a
//! 4-clique is removed, the rest colored, and the vertex put back by
//! [`extend_degree5`] or [`extend_4clique`].

use super::{ColoringCertificate, Rule, TraceStep};
use crate::cliques::{cliques_containing, cliques_meeting, is_monochromatic, maximal_cliques, VertexColoring};
use crate::error::{Error, Result};
use crate::exact::{solve_2_clique_coloring_exact, FALLBACK_LIMIT};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::recognition::{find_claw, has_minor, is_odd_cycle, is_planar, is_w5, MinorTarget};

const LOCAL_SEARCH_LIMIT: usize = 16;

/// Runs the recursive 2-coloring on every component. With `verify`, the
/// input is first checked to be claw-free and K5-minor-free.
pub fn algorithm_a(g: &Graph, verify: bool) -> Result<ColoringCertificate> {
    if verify {
        if let Some(claw) = find_claw(g) {
            return Err(Error::ClassViolation(format!("claw {claw}")));
        }
        if !is_planar(g) {
            if let Some(w) = has_minor(g, MinorTarget::K5)? {
                return Err(Error::ClassViolation(format!("K5 minor with branch sets {w}")));
            }
        }
    }
    let mut colors = vec![0u32; g.n()];
    let mut trace = Vec::new();
    for comp in g.connected_components() {
        let (h, map) = g.induced_subgraph(&comp)?;
        if let Some(length) = is_odd_cycle(&h).filter(|&l| l >= 5) {
            return Err(Error::ChromaticException {
                component: comp.into_vec(),
                length,
            });
        }
        let ids = map.old_ids().to_vec();
        for (i, c) in solve(&h, &ids, &mut trace)?.into_iter().enumerate() {
            colors[ids[i]] = c;
        }
    }
    ColoringCertificate::new(g, VertexColoring::new(colors, 2)?, trace)
}

fn step(trace: &mut Vec<TraceStep>, rule: Rule, vertex: Vertex) {
    trace.push(TraceStep { rule, vertex });
}

/// Colors a connected graph that is not an odd cycle of length at least
/// five; `ids` maps local vertices to vertices of the input graph.
fn solve(g: &Graph, ids: &[Vertex], trace: &mut Vec<TraceStep>) -> Result<Vec<u32>> {
    let n = g.n();
    if n == 1 {
        return Ok(vec![1]);
    }
    let delta = g.max_degree()?;
    if delta <= 4 {
        return base(g, ids, 0, trace);
    }
    let cliques = maximal_cliques(g);
    let omega = cliques.cliques().iter().map(VertexSet::len).max().unwrap_or(1);
    let degree = |v: Vertex| g.neighbors(v).len();

    if omega <= 3 {
        if delta > 5 {
            let v = (0..n).find(|&v| degree(v) > 5).expect("delta attained");
            return Err(Error::ClassViolation(format!(
                "vertex {} has degree {} but no 4-clique exists; impossible for claw-free K5-minor-free graphs",
                ids[v],
                degree(v)
            )));
        }
        if is_w5(g) {
            let hub = (0..n).find(|&v| degree(v) == 5).expect("wheel has a hub");
            step(trace, Rule::WheelDirect, ids[hub]);
            return Ok((0..n).map(|v| if v == hub { 1 } else { 2 }).collect());
        }
        let v = (0..n).find(|&v| degree(v) == 5).expect("delta is five");
        let Some(mut colors) = color_without(g, ids, v, trace)? else {
            return base(g, ids, v, trace);
        };
        let rule = extend_degree5_local(g, v, &mut colors)?;
        step(trace, rule, ids[v]);
        return Ok(colors);
    }

    let mut in_four = vec![false; n];
    for k in cliques.cliques().iter().filter(|k| k.len() >= 4) {
        for &u in k.iter() {
            in_four[u] = true;
        }
    }
    let v = (0..n)
        .find(|&u| in_four[u] && degree(u) <= 5)
        .or_else(|| (0..n).find(|&u| in_four[u]))
        .expect("omega >= 4");
    let Some(mut colors) = color_without(g, ids, v, trace)? else {
        return base(g, ids, v, trace);
    };
    let rule = extend_4clique_local(g, v, &mut colors)?;
    step(trace, rule, ids[v]);
    Ok(colors)
}

fn base(g: &Graph, ids: &[Vertex], at: Vertex, trace: &mut Vec<TraceStep>) -> Result<Vec<u32>> {
    let coloring = solve_2_clique_coloring_exact(g).ok_or_else(|| {
        Error::ClassViolation(format!(
            "the component containing vertex {} has no 2-clique-coloring",
            ids[0]
        ))
    })?;
    step(trace, Rule::BaseSolver, ids[at]);
    Ok(coloring.colors().to_vec())
}

/// Colors `g − v` component by component and returns the colors in the
/// coordinates of `g` with `v` left at 0, or `None` when some component
/// is an odd cycle of length at least five.
fn color_without(g: &Graph, ids: &[Vertex], v: Vertex, trace: &mut Vec<TraceStep>) -> Result<Option<Vec<u32>>> {
    let (h, relabel) = g.delete_vertex(v)?;
    let mut parts = Vec::new();
    for comp in h.connected_components() {
        let (c, cmap) = h.induced_subgraph(&comp)?;
        if is_odd_cycle(&c).is_some_and(|l| l >= 5) {
            return Ok(None);
        }
        let back: Vec<Vertex> = cmap.old_ids().iter().map(|&x| relabel.old(x)).collect();
        parts.push((c, back));
    }
    let mut full = vec![0u32; g.n()];
    for (c, back) in parts {
        let sub_ids: Vec<Vertex> = back.iter().map(|&u| ids[u]).collect();
        for (i, col) in solve(&c, &sub_ids, trace)?.into_iter().enumerate() {
            full[back[i]] = col;
        }
    }
    Ok(Some(full))
}

fn expand(g: &Graph, v: Vertex, sub: &VertexColoring) -> Result<Vec<u32>> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    if sub.len() + 1 != g.n() {
        return Err(Error::ColoringLength {
            got: sub.len(),
            expected: g.n() - 1,
        });
    }
    if sub.colors().iter().any(|&c| c > 2) {
        return Err(Error::Precondition("sub-coloring uses more than two colors".into()));
    }
    let mut full = sub.colors().to_vec();
    full.insert(v, 0);
    Ok(full)
}

fn finish(g: &Graph, colors: Vec<u32>) -> Result<VertexColoring> {
    let coloring = VertexColoring::new(colors, 2)?;
    let report = crate::is_clique_coloring(g, &coloring)?;
    if let Some(w) = report.witness {
        return Err(Error::Precondition(format!(
            "extension leaves clique {w} monochromatic; the sub-coloring was not valid on G - v"
        )));
    }
    Ok(coloring)
}

/// Puts back a vertex of degree five whose closed neighbourhood is a
/// 5-wheel. `sub` colors `g − v` (vertices above `v` shifted down by one).
pub fn extend_degree5(g: &Graph, v: Vertex, sub: &VertexColoring) -> Result<(VertexColoring, Rule)> {
    if g.degree(v)? != 5 {
        return Err(Error::Precondition(format!("vertex {v} does not have degree 5")));
    }
    let mut colors = expand(g, v, sub)?;
    let rule = extend_degree5_local(g, v, &mut colors)?;
    Ok((finish(g, colors)?, rule))
}

/// Puts back a vertex lying in a 4-clique. `sub` colors `g − v`.
pub fn extend_4clique(g: &Graph, v: Vertex, sub: &VertexColoring) -> Result<(VertexColoring, Rule)> {
    g.check_vertex(v)?;
    if !cliques_containing(g, v).iter().any(|k| k.len() >= 4) {
        return Err(Error::Precondition(format!("vertex {v} lies in no 4-clique")));
    }
    let mut colors = expand(g, v, sub)?;
    let rule = extend_4clique_local(g, v, &mut colors)?;
    Ok((finish(g, colors)?, rule))
}

fn try_color(through: &[VertexSet], v: Vertex, colors: &mut [u32]) -> bool {
    for c in [1, 2] {
        colors[v] = c;
        if !through.iter().any(|k| k.len() >= 2 && is_monochromatic(k.as_slice(), colors)) {
            return true;
        }
    }
    colors[v] = 0;
    false
}

/// Recolors the closed neighbourhood of `v`, fewest changes first. Only
/// cliques meeting the neighbourhood can be affected.
fn local_search(g: &Graph, v: Vertex, colors: &mut [u32]) -> bool {
    let ball = g.closed_neighborhood(v);
    if ball.len() > LOCAL_SEARCH_LIMIT {
        return false;
    }
    let meeting = cliques_meeting(g, ball.as_slice());
    let original: Vec<u32> = colors.to_vec();
    let mut masks: Vec<u32> = (0..1u32 << ball.len()).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    for mask in masks {
        for (i, &u) in ball.iter().enumerate() {
            let flip = mask >> i & 1 == 1;
            colors[u] = if u == v {
                1 + u32::from(flip)
            } else if flip {
                3 - original[u]
            } else {
                original[u]
            };
        }
        if !meeting.iter().any(|k| k.len() >= 2 && is_monochromatic(k.as_slice(), colors)) {
            return true;
        }
    }
    colors.copy_from_slice(&original);
    false
}

fn exact_fallback(g: &Graph, colors: &mut [u32]) -> Result<Rule> {
    if g.n() > FALLBACK_LIMIT {
        return Err(Error::InternalInconsistency(format!(
            "local extension stages failed and the exact fallback is limited to {FALLBACK_LIMIT} vertices (graph has {})",
            g.n()
        )));
    }
    let coloring = solve_2_clique_coloring_exact(g).ok_or_else(|| {
        Error::InternalInconsistency("no 2-clique-coloring exists after a successful recursive step".into())
    })?;
    colors.copy_from_slice(coloring.colors());
    Ok(Rule::BaseSolver)
}

fn extend_degree5_local(g: &Graph, v: Vertex, colors: &mut [u32]) -> Result<Rule> {
    if try_color(&cliques_containing(g, v), v, colors) {
        return Ok(Rule::TryColor);
    }
    if local_search(g, v, colors) {
        return Ok(Rule::LocalSearch);
    }
    exact_fallback(g, colors)
}

fn is_valid(g: &Graph, colors: &[u32]) -> bool {
    !maximal_cliques(g)
        .hyperedges()
        .any(|k| is_monochromatic(k.as_slice(), colors))
}

fn extend_4clique_local(g: &Graph, v: Vertex, colors: &mut [u32]) -> Result<Rule> {
    let through = cliques_containing(g, v);
    if try_color(&through, v, colors) {
        return Ok(Rule::TryColor);
    }
    let rest_is = |k: &VertexSet, c: u32| k.iter().all(|&u| u == v || colors[u] == c);
    let blocked1: Vec<&VertexSet> = through.iter().filter(|k| rest_is(k, 1)).collect();
    let blocked2: Vec<&VertexSet> = through.iter().filter(|k| rest_is(k, 2)).collect();

    for (clique, q_color) in [(blocked1.first(), 1), (blocked2.first(), 2)] {
        let Some(clique) = clique.filter(|k| k.len() == 4) else {
            continue;
        };
        let q: Vec<Vertex> = clique.iter().copied().filter(|&u| u != v).collect();
        let component = g
            .components_avoiding(&q)
            .into_iter()
            .find(|c| c.contains(v))
            .expect("v survives the removal of Q");
        let mut trial = colors.to_vec();
        for &u in component.iter().filter(|&&u| u != v) {
            trial[u] = 3 - trial[u];
        }
        trial[v] = 3 - q_color;
        if is_valid(g, &trial) {
            colors.copy_from_slice(&trial);
            return Ok(Rule::ComponentFlip);
        }
    }

    for w in through.iter().filter(|k| k.len() == 4) {
        for k in &blocked1 {
            for l in &blocked2 {
                for &x2 in w.iter().filter(|&&u| u != v && k.contains(u)) {
                    for &y2 in w.iter().filter(|&&u| u != v && l.contains(u)) {
                        let mut trial = colors.to_vec();
                        trial.swap(x2, y2);
                        for c in [1, 2] {
                            trial[v] = c;
                            if is_valid(g, &trial) {
                                colors.copy_from_slice(&trial);
                                return Ok(Rule::X2Y2Swap);
                            }
                        }
                    }
                }
            }
        }
    }

    if local_search(g, v, colors) {
        return Ok(Rule::LocalSearch);
    }
    exact_fallback(g, colors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, cycle_power, icosahedron, wheel};

    #[test]
    fn step_one_and_wheel() {
        let c = algorithm_a(&cycle(6).unwrap(), true).unwrap();
        assert_eq!(c.trace[0].rule, Rule::BaseSolver);
        let c = algorithm_a(&wheel(5).unwrap(), true).unwrap();
        assert_eq!(c.coloring.colors(), &[1, 2, 2, 2, 2, 2]);
        assert_eq!(c.trace[0].rule, Rule::WheelDirect);
        let c = algorithm_a(&cycle_power(9, 2).unwrap(), false).unwrap();
        assert_eq!(c.coloring.colors_used(), 2);
    }

    #[test]
    fn odd_cycles_are_exceptions() {
        let err = algorithm_a(&cycle(7).unwrap(), false).unwrap_err();
        assert!(matches!(err, Error::ChromaticException { length: 7, .. }));
        assert!(algorithm_a(&complete(3), true).is_ok());
    }

    #[test]
    fn verification_rejects_claws() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(matches!(algorithm_a(&star, true), Err(Error::ClassViolation(_))));
    }

    #[test]
    fn degree_five_extension() {
        let w5 = wheel(5).unwrap();
        let sub = VertexColoring::new(vec![2; 5], 2).unwrap();
        let (c, rule) = extend_degree5(&w5, 0, &sub).unwrap();
        assert_eq!((c.color(0), rule), (1, Rule::TryColor));
        let sub = VertexColoring::new(vec![2, 1, 2, 1, 2], 2).unwrap();
        let (_, rule) = extend_degree5(&w5, 0, &sub).unwrap();
        assert_eq!(rule, Rule::TryColor);
        let c = algorithm_a(&icosahedron(), true).unwrap();
        assert_eq!(c.coloring.colors_used(), 2);
    }

    #[test]
    fn four_clique_extension() {
        let k4 = complete(4);
        let sub = VertexColoring::new(vec![1, 1, 2], 2).unwrap();
        let (c, rule) = extend_4clique(&k4, 3, &sub).unwrap();
        assert_eq!((c.color(3), rule), (1, Rule::TryColor));
    }
}
