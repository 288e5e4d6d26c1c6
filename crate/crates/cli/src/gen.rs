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

use std::fs;
use std::path::PathBuf;

use clap::{Args, Subcommand, ValueEnum};
use cliquecolor::generators::{
    gen, gen_block_line_graph, gen_claw_free_planar, icosahedron, line_graph, octahedron,
    parse_blueprint, ClawFreePlanarKind, GenSpec,
};
use cliquecolor::io::write_edge_list;
use cliquecolor::Graph;

use crate::Failure;

#[derive(Args)]
pub struct GenArgs {
    #[command(subcommand)]
    family: Family,
    /// Seed for the randomized families.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Emit the line graph of the generated graph instead.
    #[arg(long, global = true)]
    line: bool,
    #[arg(short = 'o', long = "output", global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum PlanarKind {
    CyclePower2,
    LineOfPrism,
}

#[derive(Subcommand)]
enum Family {
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    /// Wheel with an n-cycle rim (hub is vertex 0).
    Wheel { n: usize },
    CyclePower { n: usize, k: usize },
    Wagner,
    TwoTree { n: usize },
    Apollonian { n: usize },
    /// Clique-sum of pieces described by a blueprint file.
    WagnerSum { blueprint: PathBuf },
    Prism { k: usize },
    Figure5,
    #[command(name = "l-k6")]
    LK6,
    Octahedron,
    Icosahedron,
    /// Line graph of a chain of prisms.
    BlockLine { blocks: usize },
    ClawFreePlanar {
        #[arg(value_enum)]
        kind: PlanarKind,
        n: usize,
    },
}

fn build(args: &GenArgs) -> Result<Graph, Failure> {
    let seed = args.seed;
    let spec = match &args.family {
        Family::Cycle { n } => GenSpec::Cycle { n: *n },
        Family::Complete { n } => GenSpec::Complete { n: *n },
        Family::CompleteBipartite { a, b } => GenSpec::CompleteBipartite { a: *a, b: *b },
        Family::Wheel { n } => GenSpec::Wheel { n: *n },
        Family::CyclePower { n, k } => GenSpec::CyclePower { n: *n, k: *k },
        Family::Wagner => GenSpec::Wagner,
        Family::TwoTree { n } => GenSpec::TwoTree { n: *n, seed },
        Family::Apollonian { n } => GenSpec::Apollonian { n: *n, seed },
        Family::WagnerSum { blueprint } => {
            let text = fs::read_to_string(blueprint)
                .map_err(|e| Failure::Usage(format!("{}: {e}", blueprint.display())))?;
            GenSpec::WagnerSum { blueprint: parse_blueprint(&text)?, seed }
        }
        Family::Prism { k } => GenSpec::Prism { k: *k },
        Family::Figure5 => GenSpec::Figure5,
        Family::LK6 => GenSpec::LK6,
        Family::Octahedron => return Ok(octahedron()),
        Family::Icosahedron => return Ok(icosahedron()),
        Family::BlockLine { blocks } => return Ok(gen_block_line_graph(*blocks, seed)?),
        Family::ClawFreePlanar { kind, n } => {
            let kind = match kind {
                PlanarKind::CyclePower2 => ClawFreePlanarKind::CyclePower2,
                PlanarKind::LineOfPrism => ClawFreePlanarKind::LineOfPrism,
            };
            return Ok(gen_claw_free_planar(kind, *n)?);
        }
    };
    Ok(gen(&spec)?)
}

pub fn run(args: &GenArgs) -> Result<String, Failure> {
    let g = build(args)?;
    let g = if args.line { line_graph(&g) } else { g };
    Ok(write_edge_list(&g))
}
