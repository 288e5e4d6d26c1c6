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

use cliquecolor::decomposition::{reconstruct, wagner_decompose, PieceKind, WagnerDecomposition};
use cliquecolor::generators::{gen_wagner_sum, parse_blueprint, Blueprint, BlueprintPiece};
use cliquecolor::recognition::{has_minor, is_plane_triangulation, is_wagner_graph};
use cliquecolor::{Graph, MinorTarget};
use proptest::prelude::*;

fn arb_blueprint(max_pieces: usize, two_sums_only: bool) -> impl Strategy<Value = Blueprint> {
    let piece = (any::<bool>(), 4usize..=30, any::<bool>()).prop_map(move |(wagner, size, triple)| {
        if wagner {
            BlueprintPiece { kind: PieceKind::Wagner, size: 8, arity: 2 }
        } else {
            let arity = if triple && !two_sums_only { 3 } else { 2 };
            BlueprintPiece { kind: PieceKind::Triangulation, size, arity }
        }
    });
    proptest::collection::vec(piece, 1..=max_pieces).prop_filter_map("needs a triangle for every 3-sum", |mut pieces| {
        pieces[0].arity = 2;
        let first_triangle = pieces.iter().position(|p| p.kind == PieceKind::Triangulation)?;
        let ok = pieces.iter().enumerate().all(|(i, p)| p.arity == 2 || i > first_triangle);
        ok.then_some(Blueprint(pieces))
    })
}

fn check_structure(g: &Graph, d: &WagnerDecomposition) {
    assert_eq!(&reconstruct(d).unwrap(), g);
    for p in &d.pieces {
        match p.kind {
            PieceKind::Triangulation => assert!(is_plane_triangulation(&p.graph)),
            PieceKind::Wagner => assert!(is_wagner_graph(&p.graph).is_some()),
        }
    }
    for e in &d.glues {
        let s = e.boundary.as_slice();
        assert!(s.len() == 2 || s.len() == 3);
        assert!(g.is_clique(s));
        assert!(g.components_avoiding(s).len() > 1, "boundary {} does not separate", e.boundary);
    }
}

#[test]
fn three_piece_blueprint_round_trips() {
    let bp = parse_blueprint("piece triangulation 8 glue2\npiece triangulation 8 glue3\npiece wagner 8 glue2\n").unwrap();
    for seed in 0..20 {
        let sum = gen_wagner_sum(&bp, seed).unwrap();
        let d = wagner_decompose(&sum.graph).unwrap().expect("generated sums decompose");
        check_structure(&sum.graph, &d);
        assert_eq!(d.count(PieceKind::Wagner), 1);
        assert!(d.count(PieceKind::Triangulation) >= 1);
    }
}

#[test]
fn generated_sums_are_k5_minor_free() {
    let bp = parse_blueprint("piece wagner 8 glue2\npiece triangulation 10 glue2\npiece wagner 8 glue2\npiece triangulation 12 glue3\n").unwrap();
    for seed in 0..5 {
        let sum = gen_wagner_sum(&bp, seed).unwrap();
        assert_eq!(has_minor(&sum.graph, MinorTarget::K5).unwrap(), None);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn two_sums_recover_the_blueprint(bp in arb_blueprint(6, true), seed in any::<u64>()) {
        let sum = gen_wagner_sum(&bp, seed).unwrap();
        let d = wagner_decompose(&sum.graph).unwrap().expect("generated sums decompose");
        check_structure(&sum.graph, &d);
        let mut got: Vec<(PieceKind, usize)> = d.pieces.iter().map(|p| (p.kind, p.graph.n())).collect();
        let mut want: Vec<(PieceKind, usize)> = bp.0.iter().map(|p| (p.kind, p.size)).collect();
        got.sort();
        want.sort();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn mixed_sums_decompose(bp in arb_blueprint(6, false), seed in any::<u64>()) {
        let sum = gen_wagner_sum(&bp, seed).unwrap();
        let d = wagner_decompose(&sum.graph).unwrap().expect("generated sums decompose");
        check_structure(&sum.graph, &d);
        let wagners = bp.0.iter().filter(|p| p.kind == PieceKind::Wagner).count();
        prop_assert_eq!(d.count(PieceKind::Wagner), wagners);
    }
}
