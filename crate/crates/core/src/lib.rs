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

//! Clique-hypergraph coloring of graphs from minor-closed classes.
//!
//! The crate enumerates maximal cliques, checks and constructs
//! k-clique-colorings (colorings in which no maximal clique with at least two
//! vertices is monochromatic), recognises the graph classes the constructions
//! apply to, decomposes edge-maximal K5-minor-free graphs into plane
//! triangulations and Wagner graphs, and provides exhaustive oracles for
//! cross-checking on small inputs.

pub mod cliques;
pub mod colorers;
pub mod decomposition;
pub mod error;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod recognition;

pub use cliques::{
    check_clique_coloring, clique_number, cliques_containing, cliques_meeting, degeneracy_order,
    is_clique_coloring, maximal_cliques, CliqueSet, ValidityReport, VertexColoring,
};
pub use error::{Error, Result};
pub use exact::{solve_2_clique_coloring_exact, solve_2_clique_coloring_guarded, FALLBACK_LIMIT};
pub use graph::{Graph, Relabel, Vertex, VertexSet};
pub use oracle::{oracle_clique_chromatic, oracle_clique_transversal, transversal_from_coloring, ORACLE_LIMIT};
pub use recognition::{ClawWitness, MinorTarget, MinorWitness, RecognitionReport};
