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

//! Constructive clique-colorings and their audit trail.

mod algorithm_a;
mod k5;

use std::fmt;

pub use algorithm_a::{algorithm_a, extend_4clique, extend_degree5};
pub use k5::{
    color_maximal_k5_free, color_v8, extend_into_piece, merge_coloring_triangulation,
    monochromatic_triangles, V8Prescription,
};

use crate::cliques::{is_clique_coloring, ValidityReport, VertexColoring};
use crate::decomposition::two_tree_order;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::recognition::is_odd_cycle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    TryColor,
    ComponentFlip,
    X2Y2Swap,
    LocalSearch,
    BaseSolver,
    PieceExtension,
    RootPiece,
    Attach,
    WheelDirect,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::TryColor => "try-color",
            Rule::ComponentFlip => "component-flip",
            Rule::X2Y2Swap => "x2y2-swap",
            Rule::LocalSearch => "local-search",
            Rule::BaseSolver => "base-solver",
            Rule::PieceExtension => "piece-extension",
            Rule::RootPiece => "root-piece",
            Rule::Attach => "attach",
            Rule::WheelDirect => "wheel-direct",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub rule: Rule,
    pub vertex: Vertex,
}

/// A coloring together with the rules that produced it. Only constructed
/// after the coloring has passed the clique checker.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringCertificate {
    pub coloring: VertexColoring,
    pub trace: Vec<TraceStep>,
    pub validity: ValidityReport,
}

impl ColoringCertificate {
    pub fn new(g: &Graph, coloring: VertexColoring, trace: Vec<TraceStep>) -> Result<Self> {
        let validity = is_clique_coloring(g, &coloring)?;
        if let Some(w) = &validity.witness {
            return Err(Error::InternalInconsistency(format!(
                "constructed coloring leaves clique {w} monochromatic"
            )));
        }
        Ok(ColoringCertificate {
            coloring,
            trace,
            validity,
        })
    }

    pub fn count(&self, rule: Rule) -> usize {
        self.trace.iter().filter(|s| s.rule == rule).count()
    }
}

impl fmt::Display for ColoringCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.coloring)?;
        for (k, step) in self.trace.iter().enumerate() {
            writeln!(f, "step {}: {} v={}", k + 1, step.rule, step.vertex)?;
        }
        Ok(())
    }
}

/// Two colors for a 2-tree: the base triangle gets (1, 1, 2); a vertex
/// attached to a monochromatic edge gets the other color, otherwise 1.
pub fn color_2tree(g: &Graph) -> Result<ColoringCertificate> {
    let n = g.n();
    if n <= 2 && g.is_connected() {
        let colors = (1..=n as u32).collect();
        return ColoringCertificate::new(g, VertexColoring::new(colors, 2)?, Vec::new());
    }
    let order = two_tree_order(g)?;
    let mut colors = vec![0u32; n];
    for (&(v, _), c) in order.iter().zip([1, 1, 2]) {
        colors[v] = c;
    }
    let mut trace = vec![TraceStep {
        rule: Rule::RootPiece,
        vertex: order[0].0,
    }];
    for &(v, attach) in &order[3..] {
        let (a, b) = attach.expect("vertices after the base triangle are attached");
        colors[v] = if colors[a] == colors[b] { 3 - colors[a] } else { 1 };
        trace.push(TraceStep {
            rule: Rule::Attach,
            vertex: v,
        });
    }
    ColoringCertificate::new(g, VertexColoring::new(colors, 2)?, trace)
}

/// Alternates 1, 2 around the cycle starting at vertex 0 towards its smaller
/// neighbour, and gives the last vertex color 3.
pub fn color_odd_cycle(g: &Graph) -> Result<VertexColoring> {
    match is_odd_cycle(g) {
        Some(len) if len >= 5 => {}
        _ => return Err(Error::NotOddCycle),
    }
    let n = g.n();
    let mut colors = vec![0u32; n];
    let (mut prev, mut cur) = (usize::MAX, 0);
    for i in 0..n {
        colors[cur] = if i == n - 1 { 3 } else { 1 + (i % 2) as u32 };
        let next = g.neighbors(cur).iter().copied().find(|&w| w != prev).expect("2-regular");
        prev = cur;
        cur = next;
    }
    let coloring = VertexColoring::new(colors, 3)?;
    let report = is_clique_coloring(g, &coloring)?;
    if let Some(w) = report.witness {
        return Err(Error::InternalInconsistency(format!("odd-cycle coloring leaves {w} monochromatic")));
    }
    Ok(coloring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, gen_two_tree};

    #[test]
    fn two_tree_examples() {
        let c = color_2tree(&complete(3)).unwrap();
        assert_eq!(c.coloring.colors(), &[1, 1, 2]);
        let diamond = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
        let c = color_2tree(&diamond).unwrap();
        assert_eq!(c.coloring.colors(), &[1, 1, 2, 2]);
        let c = color_2tree(&gen_two_tree(200, 11).unwrap()).unwrap();
        assert!(c.validity.is_valid());
        assert_eq!(c.coloring.colors_used(), 2);
        assert!(color_2tree(&cycle(5).unwrap()).is_err());
        assert_eq!(color_2tree(&complete(2)).unwrap().coloring.colors(), &[1, 2]);
    }

    #[test]
    fn odd_cycles() {
        assert_eq!(color_odd_cycle(&cycle(5).unwrap()).unwrap().colors(), &[1, 2, 1, 2, 3]);
        assert_eq!(color_odd_cycle(&cycle(7).unwrap()).unwrap().colors(), &[1, 2, 1, 2, 1, 2, 3]);
        assert!(color_odd_cycle(&cycle(9).unwrap()).is_ok());
        assert!(matches!(color_odd_cycle(&complete(3)), Err(Error::NotOddCycle)));
        assert!(matches!(color_odd_cycle(&cycle(6).unwrap()), Err(Error::NotOddCycle)));
    }

    #[test]
    fn certificate_text() {
        let c = color_2tree(&complete(3)).unwrap();
        assert_eq!(c.to_string(), "1 1 2\nstep 1: root-piece v=0\n");
    }
}
