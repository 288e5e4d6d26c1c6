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

//! Seeded workloads shared by the benchmarks.

use cliquecolor::generators::{
    cycle_power, gen_apollonian, gen_block_line_graph, gen_two_tree, gen_wagner_sum, parse_blueprint,
};
use cliquecolor::Graph;

pub const SIZES: [usize; 4] = [100, 200, 400, 800];

pub fn cycle_square(n: usize) -> Graph {
    cycle_power(n, 2).expect("n >= 5")
}

pub fn two_tree(n: usize) -> Graph {
    gen_two_tree(n, n as u64).expect("n >= 3")
}

pub fn triangulation(n: usize) -> Graph {
    gen_apollonian(n, n as u64).expect("n >= 4")
}

pub fn block_line(blocks: usize) -> Graph {
    gen_block_line_graph(blocks, blocks as u64).expect("blocks >= 1")
}

/// Six pieces: four triangulations of 30 vertices and two Wagner graphs.
pub fn wagner_sum() -> Graph {
    let bp = parse_blueprint(
        "piece triangulation 30 glue2\n\
         piece wagner 8 glue2\n\
         piece triangulation 30 glue3\n\
         piece triangulation 30 glue2\n\
         piece wagner 8 glue2\n\
         piece triangulation 30 glue3\n",
    )
    .expect("well-formed blueprint");
    gen_wagner_sum(&bp, 11).expect("feasible blueprint").graph
}
