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

use std::collections::BTreeMap;

use cliquecolor::colorers::{algorithm_a, extend_4clique, extend_degree5, Rule};
use cliquecolor::generators::corpus::{claw_free_planar_corpus, claw_free_structured_corpus};
use cliquecolor::generators::icosahedron;
use cliquecolor::recognition::{check_wheel_neighborhoods, check_degree_at_most_six, find_claw, has_minor, is_planar};
use cliquecolor::{
    clique_number, cliques_containing, is_clique_coloring, oracle_clique_chromatic, Graph,
    MinorTarget, VertexColoring,
};

fn in_class(g: &Graph) -> bool {
    find_claw(g).is_none() && (is_planar(g) || has_minor(g, MinorTarget::K5).unwrap().is_none())
}

fn assert_extension(g: &Graph, v: usize, sub: &[u32], expected: Rule) {
    assert!(in_class(g));
    let (h, _) = g.delete_vertex(v).unwrap();
    let sub = VertexColoring::new(sub.to_vec(), 2).unwrap();
    assert!(is_clique_coloring(&h, &sub).unwrap().is_valid());
    let four = cliques_containing(g, v).iter().any(|k| k.len() == 4);
    let (c, rule) = if four { extend_4clique(g, v, &sub) } else { extend_degree5(g, v, &sub) }.unwrap();
    assert_eq!(rule, expected);
    assert!(is_clique_coloring(g, &c).unwrap().is_valid());
}

#[test]
fn component_flip_on_two_near_complete_blocks() {
    // Two copies of K5 minus an edge sharing vertex 0; in each, the 4-clique
    // through 0 minus 0 is a triangle that extends to a 4-clique avoiding 0.
    let g = Graph::from_edges(
        9,
        [
            (0, 1), (0, 2), (0, 3), (0, 5), (0, 6), (0, 7),
            (1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4),
            (5, 6), (5, 7), (6, 7), (5, 8), (6, 8), (7, 8),
        ],
    )
    .unwrap();
    assert_extension(&g, 0, &[1, 1, 1, 2, 2, 2, 2, 1], Rule::ComponentFlip);
}

#[test]
fn component_flip_small_instance() {
    let g = Graph::from_edges(
        7,
        [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 4), (1, 6), (2, 4), (2, 6), (3, 5), (4, 6)],
    )
    .unwrap();
    assert_extension(&g, 0, &[2, 2, 1, 2, 2, 1], Rule::ComponentFlip);
}

#[test]
fn x2y2_swap_instance() {
    let g = Graph::from_edges(
        8,
        [
            (0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (1, 4), (1, 5), (1, 7), (2, 5),
            (2, 6), (3, 4), (3, 6), (3, 7), (4, 5), (4, 7), (5, 6), (5, 7), (6, 7),
        ],
    )
    .unwrap();
    assert_extension(&g, 0, &[2, 1, 2, 1, 1, 2, 1], Rule::X2Y2Swap);
}

#[test]
fn degree_five_local_search_on_the_icosahedron() {
    assert_extension(&icosahedron(), 0, &[1, 1, 1, 2, 2, 2, 2, 2, 2, 1, 1], Rule::LocalSearch);
}

#[test]
fn structured_corpus_is_in_class_and_two_colorable() {
    let mut rules: BTreeMap<String, usize> = BTreeMap::new();
    let corpus = claw_free_structured_corpus(17);
    for inst in &corpus {
        let g = &inst.graph;
        assert_eq!(find_claw(g), None, "{}", inst.name);
        assert!(is_planar(g) || has_minor(g, MinorTarget::K5).unwrap().is_none(), "{}", inst.name);
        assert!(check_degree_at_most_six(g), "{}", inst.name);
        if clique_number(g).unwrap() <= 3 {
            assert!(check_wheel_neighborhoods(g).unwrap(), "{}", inst.name);
        }
        let cert = algorithm_a(g, true).unwrap_or_else(|e| panic!("{}: {e}", inst.name));
        assert!(cert.validity.is_valid());
        assert!(cert.coloring.k() == 2);
        for s in &cert.trace {
            *rules.entry(s.rule.to_string()).or_default() += 1;
        }
        if g.n() <= 14 {
            assert!(oracle_clique_chromatic(g, 2).unwrap().is_some(), "{}", inst.name);
        }
    }
    println!("{} instances, rules fired: {rules:?}", corpus.len());
    assert!(rules.contains_key(&Rule::TryColor.to_string()));
}

#[test]
fn planar_corpus_is_colored_by_the_base_solver() {
    for inst in claw_free_planar_corpus() {
        let cert = algorithm_a(&inst.graph, false).unwrap();
        assert!(cert.validity.is_valid(), "{}", inst.name);
        assert_eq!(cert.coloring.colors_used(), 2);
    }
}
