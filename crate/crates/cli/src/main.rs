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

mod gen;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cliquecolor::colorers::{
    algorithm_a, color_2tree, color_maximal_k5_free, color_odd_cycle, ColoringCertificate,
};
use cliquecolor::decomposition::wagner_decompose;
use cliquecolor::io::{parse_coloring, parse_edge_list};
use cliquecolor::recognition::{recognize_with_limit, MINOR_HARD_CAP, MINOR_LIMIT};
use cliquecolor::{
    is_clique_coloring, maximal_cliques, oracle_clique_chromatic, oracle_clique_transversal,
    Error, Graph, VertexColoring, ORACLE_LIMIT,
};

/// Largest graph any subcommand accepts.
const GRAPH_HARD_CAP: usize = 100_000;

#[derive(Parser)]
#[command(name = "cliquecolor", version, about = "Clique-colorings of minor-free graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Io {
    /// Edge-list input (defaults to stdin).
    #[arg(short = 'i', long = "input")]
    input: Option<PathBuf>,
    /// Output file (defaults to stdout).
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
    /// Refuse graphs with more vertices than this.
    #[arg(long = "max-n")]
    max_n: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// List the maximal cliques, one per line.
    Cliques(Io),
    /// Check a coloring against the clique hypergraph.
    Check {
        #[command(flatten)]
        io: Io,
        #[arg(short = 'c', long = "coloring")]
        coloring: PathBuf,
    },
    /// 2-clique-color a {claw, K5-minor}-free graph.
    Color2 {
        #[command(flatten)]
        io: Io,
        /// Confirm the input is claw-free and K5-minor-free first.
        #[arg(long)]
        verify: bool,
        /// Print the rule trace after the coloring.
        #[arg(long)]
        certify: bool,
    },
    /// 3-clique-color an edge-maximal K5-minor-free graph.
    Color3max {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        certify: bool,
    },
    /// 2-clique-color a 2-tree.
    #[command(name = "color-2tree")]
    Color2Tree {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        certify: bool,
    },
    /// 3-clique-color an odd cycle.
    ColorOddcycle(Io),
    /// Exact small-instance oracles.
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
    /// Report class membership and basic statistics.
    Recognize(Io),
    /// Split an edge-maximal K5-minor-free graph into its pieces.
    Decompose(Io),
    /// Generate a graph family in edge-list format.
    Gen(gen::GenArgs),
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Clique-chromatic number.
    Chromatic {
        #[command(flatten)]
        io: Io,
        #[arg(long, default_value_t = 4)]
        max_k: u32,
    },
    /// Clique-transversal number.
    Transversal(Io),
}

enum Failure {
    Usage(String),
    /// A correct "no" answer; `payload` still goes to the output.
    Negative { payload: String, message: String },
    Class(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Negative { .. } => 2,
            Failure::Class(_) => 3,
            Failure::Internal(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Class(m) | Failure::Internal(m) => m,
            Failure::Negative { message, .. } => message,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::ChromaticException { length, .. } => Failure::Negative {
                payload: String::new(),
                message: format!(
                    "input has an odd-cycle component of length {length}, which is not 2-clique-colorable; \
                     use `cliquecolor color-oddcycle` for a 3-clique-coloring"
                ),
            },
            Error::InvalidColoring(_) => Failure::Negative { payload: String::new(), message: msg },
            Error::ClassViolation(_)
            | Error::NotDecomposable(_)
            | Error::NotTwoTree(_)
            | Error::NotOddCycle
            | Error::Disconnected
            | Error::Precondition(_) => Failure::Class(msg),
            Error::InternalInconsistency(_) => Failure::Internal(msg),
            _ => Failure::Usage(msg),
        }
    }
}

fn read_text(path: Option<&PathBuf>) -> std::result::Result<String, Failure> {
    let mut text = String::new();
    match path {
        Some(p) => text = fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?,
        None => {
            io::stdin().read_to_string(&mut text).map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
        }
    }
    Ok(text)
}

fn guard(io: &Io, default: usize, hard_cap: usize) -> std::result::Result<usize, Failure> {
    match io.max_n {
        Some(m) if m > hard_cap => Err(Failure::Usage(format!("--max-n {m} is above the hard cap of {hard_cap}"))),
        Some(m) => Ok(m),
        None => Ok(default),
    }
}

fn load(io: &Io, hard_cap: usize) -> std::result::Result<Graph, Failure> {
    let limit = guard(io, hard_cap, hard_cap)?;
    let g = parse_edge_list(&read_text(io.input.as_ref())?)?;
    if g.n() > limit {
        return Err(Failure::Usage(format!("input has {} vertices, above the limit of {limit}", g.n())));
    }
    Ok(g)
}

fn self_check(g: &Graph, c: &VertexColoring) -> std::result::Result<(), Failure> {
    let report = is_clique_coloring(g, c)?;
    if report.is_valid() {
        Ok(())
    } else {
        Err(Failure::Internal(format!("produced coloring failed the check: {report}")))
    }
}

fn certified(g: &Graph, cert: ColoringCertificate, certify: bool) -> std::result::Result<String, Failure> {
    self_check(g, &cert.coloring)?;
    Ok(if certify { format!("{}\n", cert.to_string().trim_end()) } else { format!("{}\n", cert.coloring) })
}

fn run(command: Command) -> (Option<PathBuf>, std::result::Result<String, Failure>) {
    match command {
        Command::Cliques(io) => {
            let out = load(&io, GRAPH_HARD_CAP).map(|g| {
                maximal_cliques(&g).cliques().iter().map(|k| format!("{k}\n")).collect()
            });
            (io.output, out)
        }
        Command::Check { io, coloring } => {
            let out = (|| {
                let g = load(&io, GRAPH_HARD_CAP)?;
                let c = parse_coloring(&read_text(Some(&coloring))?)?;
                let report = is_clique_coloring(&g, &c)?;
                if report.is_valid() {
                    Ok(format!("{report}\n"))
                } else {
                    Err(Failure::Negative {
                        payload: format!("{report}\n"),
                        message: "coloring leaves a maximal clique monochromatic".into(),
                    })
                }
            })();
            (io.output, out)
        }
        Command::Color2 { io, verify, certify } => {
            let out = load(&io, GRAPH_HARD_CAP)
                .and_then(|g| certified(&g, algorithm_a(&g, verify)?, certify));
            (io.output, out)
        }
        Command::Color3max { io, certify } => {
            let out = load(&io, GRAPH_HARD_CAP)
                .and_then(|g| certified(&g, color_maximal_k5_free(&g)?, certify));
            (io.output, out)
        }
        Command::Color2Tree { io, certify } => {
            let out = load(&io, GRAPH_HARD_CAP).and_then(|g| certified(&g, color_2tree(&g)?, certify));
            (io.output, out)
        }
        Command::ColorOddcycle(io) => {
            let out = load(&io, GRAPH_HARD_CAP).and_then(|g| {
                let c = color_odd_cycle(&g)?;
                self_check(&g, &c)?;
                Ok(format!("{c}\n"))
            });
            (io.output, out)
        }
        Command::Oracle { which: OracleCommand::Chromatic { io, max_k } } => {
            let out = load(&io, ORACLE_LIMIT).and_then(|g| match oracle_clique_chromatic(&g, max_k)? {
                Some(k) => Ok(format!("{k}\n")),
                None => Err(Failure::Negative {
                    payload: format!("exceeds {max_k}\n"),
                    message: format!("no clique-coloring with at most {max_k} colors"),
                }),
            });
            (io.output, out)
        }
        Command::Oracle { which: OracleCommand::Transversal(io) } => {
            let out = load(&io, ORACLE_LIMIT).and_then(|g| Ok(format!("{}\n", oracle_clique_transversal(&g)?)));
            (io.output, out)
        }
        Command::Recognize(io) => {
            let out = guard(&io, MINOR_LIMIT, MINOR_HARD_CAP).and_then(|limit| {
                let g = parse_edge_list(&read_text(io.input.as_ref())?)?;
                Ok(recognize_with_limit(&g, limit)?.to_string())
            });
            (io.output, out)
        }
        Command::Decompose(io) => {
            let out = load(&io, GRAPH_HARD_CAP).and_then(|g| match wagner_decompose(&g)? {
                Some(d) => Ok(d.to_string()),
                None => Err(Failure::Class("no Wagner decomposition: the graph is not edge-maximal K5-minor-free".into())),
            });
            (io.output, out)
        }
        Command::Gen(args) => {
            let output = args.output.clone();
            (output, gen::run(&args))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let (output, result) = run(cli.command);
    let (payload, failure) = match result {
        Ok(p) => (p, None),
        Err(Failure::Negative { payload, message }) => {
            (payload.clone(), Some(Failure::Negative { payload, message }))
        }
        Err(f) => (String::new(), Some(f)),
    };
    let written = match &output {
        Some(path) => fs::write(path, &payload).map_err(|e| format!("{}: {e}", path.display())),
        None => io::stdout().write_all(payload.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    match failure {
        None => ExitCode::SUCCESS,
        Some(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
