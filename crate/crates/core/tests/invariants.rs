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

use cliquecolor::colorers::{algorithm_a, color_2tree, color_maximal_k5_free, monochromatic_triangles};
use cliquecolor::generators::corpus::claw_free_structured_corpus;
use cliquecolor::generators::{gen_two_tree, gen_wagner_sum, Blueprint, BlueprintPiece, PieceKind};
use cliquecolor::{
    is_clique_coloring, maximal_cliques, oracle_clique_chromatic, oracle_clique_transversal,
    solve_2_clique_coloring_exact, transversal_from_coloring, Graph, VertexSet,
};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |mask| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, pairs.zip(mask).filter(|(_, on)| *on).map(|(e, _)| e)).unwrap()
        })
    })
}

fn naive_maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let is_clique = |m: u32| (0..n).all(|u| m >> u & 1 == 0 || (u + 1..n).all(|v| m >> v & 1 == 0 || g.has_edge(u, v)));
    let mut out: Vec<VertexSet> = (1u32..1 << n)
        .filter(|&m| is_clique(m) && (0..n).all(|w| m >> w & 1 == 1 || !is_clique(m | 1 << w)))
        .map(|m| VertexSet::from_unsorted((0..n).filter(|&u| m >> u & 1 == 1).collect()))
        .collect();
    out.sort();
    out
}

fn chromatic_number(g: &Graph) -> u32 {
    fn place(g: &Graph, v: usize, k: u32, colors: &mut Vec<u32>) -> bool {
        if v == g.n() {
            return true;
        }
        for c in 1..=k {
            if g.neighbors(v).iter().all(|&w| w > v || colors[w] != c) {
                colors[v] = c;
                if place(g, v + 1, k, colors) {
                    return true;
                }
            }
        }
        false
    }
    (1..).find(|&k| place(g, 0, k, &mut vec![0; g.n()])).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn maximal_cliques_match_subset_enumeration(g in arb_graph(8)) {
        prop_assert_eq!(maximal_cliques(&g).cliques().to_vec(), naive_maximal_cliques(&g));
    }

    #[test]
    fn maximal_cliques_avoiding_v_stay_maximal_in_g_minus_v(g in arb_graph(8), pick in any::<usize>()) {
        let v = pick % g.n();
        let (h, relabel) = g.delete_vertex(v).unwrap();
        let in_h = maximal_cliques(&h);
        for k in maximal_cliques(&g).cliques().iter().filter(|k| !k.contains(v)) {
            let mapped = VertexSet::from_unsorted(k.iter().map(|&u| relabel.new_id(u).unwrap()).collect());
            prop_assert!(in_h.cliques().contains(&mapped));
        }
    }

    #[test]
    fn clique_chromatic_is_at_most_chromatic(g in arb_graph(8)) {
        let chi = chromatic_number(&g);
        let chi_c = oracle_clique_chromatic(&g, chi).unwrap();
        prop_assert!(chi_c.is_some_and(|c| c <= chi));
    }

    #[test]
    fn exact_solver_agrees_with_the_oracle(g in arb_graph(10)) {
        let solved = solve_2_clique_coloring_exact(&g);
        let oracle = oracle_clique_chromatic(&g, 2).unwrap();
        prop_assert_eq!(solved.is_some(), oracle.is_some());
        if let Some(c) = solved {
            prop_assert!(is_clique_coloring(&g, &c).unwrap().is_valid());
        }
    }

    #[test]
    fn two_tree_colorings(n in 3usize..200, seed in any::<u64>()) {
        let g = gen_two_tree(n, seed).unwrap();
        let cert = color_2tree(&g).unwrap();
        prop_assert!(cert.validity.is_valid());
        prop_assert_eq!(cert.coloring.colors_used(), 2);
        if n <= 12 {
            prop_assert_eq!(oracle_clique_chromatic(&g, 2).unwrap(), Some(2));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn maximal_k5_free_colorings(
        pieces in proptest::collection::vec((any::<bool>(), 4usize..=30, any::<bool>()), 1..=6),
        seed in any::<u64>(),
    ) {
        let mut bp: Vec<BlueprintPiece> = pieces
            .into_iter()
            .map(|(w, size, triple)| if w {
                BlueprintPiece { kind: PieceKind::Wagner, size: 8, arity: 2 }
            } else {
                BlueprintPiece { kind: PieceKind::Triangulation, size, arity: if triple { 3 } else { 2 } }
            })
            .collect();
        bp[0].arity = 2;
        if bp[0].kind == PieceKind::Wagner {
            for p in &mut bp {
                p.arity = 2;
            }
        }
        let sum = gen_wagner_sum(&Blueprint(bp), seed);
        prop_assume!(sum.is_ok());
        let g = sum.unwrap().graph;
        let cert = color_maximal_k5_free(&g).unwrap();
        prop_assert!(cert.validity.is_valid());
        prop_assert!(cert.coloring.k() <= 3);
        prop_assert_eq!(monochromatic_triangles(&g, cert.coloring.colors()), 0);
        prop_assert_eq!(color_maximal_k5_free(&g).unwrap(), cert);
    }
}

#[test]
fn transversals_from_algorithm_a_are_at_most_half() {
    for inst in claw_free_structured_corpus(3) {
        let g = &inst.graph;
        let cert = algorithm_a(g, false).unwrap();
        assert_eq!(algorithm_a(g, false).unwrap(), cert, "{}", inst.name);
        let h = maximal_cliques(g);
        let t = transversal_from_coloring(g, &h, &cert.coloring).unwrap();
        assert!(t.len() <= g.n() / 2, "{}", inst.name);
        assert!(h.hyperedges().all(|k| k.iter().any(|v| t.contains(*v))));
        if g.n() <= 14 {
            assert!(oracle_clique_transversal(g).unwrap() <= g.n() / 2);
        }
    }
}
