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

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("operation requires a non-empty graph")]
    EmptyGraph,

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid vertex set: {0}")]
    InvalidVertexSet(String),

    #[error("input has {n} vertices, above the limit of {limit} for {operation}")]
    SizeGuard {
        operation: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("minor search exceeded its budget of {0} nodes")]
    SearchBudget(u64),

    #[error("coloring has length {got}, expected {expected}")]
    ColoringLength { got: usize, expected: usize },

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("not a 2-tree: {0}")]
    NotTwoTree(String),

    #[error("not an odd cycle of length at least 5")]
    NotOddCycle,

    #[error("component {component:?} is an odd cycle of length {length}; it needs 3 colors (use the odd-cycle colorer)")]
    ChromaticException {
        component: Vec<usize>,
        length: usize,
    },

    #[error("class violation: {0}")]
    ClassViolation(String),

    #[error("no Wagner decomposition: {0}")]
    NotDecomposable(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("invalid generator parameters: {0}")]
    Generator(String),
}
