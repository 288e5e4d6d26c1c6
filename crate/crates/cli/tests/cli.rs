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

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use cliquecolor::generators::{cycle, figure5, gen_apollonian, gen_two_tree, wheel};
use cliquecolor::io::{parse_coloring, parse_edge_list, write_edge_list};
use cliquecolor::{is_clique_coloring, Graph};

fn cli(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cliquecolor"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn on(g: &Graph, args: &[&str]) -> Output {
    cli(args, &write_edge_list(g))
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn color2_on_w5() {
    let dir = tempfile::tempdir().unwrap();
    let w5 = write(dir.path(), "w5.el", &write_edge_list(&wheel(5).unwrap()));
    let out = cli(&["color2", "-i", &w5], "");
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "1 2 2 2 2 2\n");
}

#[test]
fn check_reports_the_c5_witness() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.el", &write_edge_list(&cycle(5).unwrap()));
    let col = write(dir.path(), "12121.txt", "1 2 1 2 1\n");
    let out = cli(&["check", "-i", &c5, "-c", &col], "");
    assert_eq!(code(&out), 2);
    assert_eq!(stdout(&out), "invalid 0 4\n");

    let good = write(dir.path(), "12123.txt", "1 2 1 2 3\n");
    let out = cli(&["check", "-i", &c5, "-c", &good], "");
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "valid\n");
}

#[test]
fn figure5_oracle_and_recognition() {
    let out = on(&figure5(), &["oracle", "chromatic"]);
    assert_eq!((code(&out), stdout(&out)), (0, "3\n".to_string()));

    let out = on(&figure5(), &["oracle", "chromatic", "--max-k", "2"]);
    assert_eq!((code(&out), stdout(&out)), (2, "exceeds 2\n".to_string()));

    let report = stdout(&on(&figure5(), &["recognize"]));
    assert!(report.lines().any(|l| l == "k4_minor_free=true"));
    assert!(report.lines().any(|l| l == "claw_free=false"));
    assert!(report.lines().any(|l| l.starts_with("claw=")));
}

#[test]
fn odd_cycles_are_a_negative_answer_for_color2() {
    for n in [5, 7, 9] {
        let g = cycle(n).unwrap();
        let out = on(&g, &["color2"]);
        assert_eq!(code(&out), 2);
        assert!(String::from_utf8_lossy(&out.stderr).contains("color-oddcycle"));

        let out = on(&g, &["color-oddcycle"]);
        assert_eq!(code(&out), 0);
        let c = parse_coloring(&stdout(&out)).unwrap();
        assert!(is_clique_coloring(&g, &c).unwrap().is_valid());
    }
}

#[test]
fn class_violations_exit_3() {
    let claw = parse_edge_list("4 3\n0 1\n0 2\n0 3\n").unwrap();
    assert_eq!(code(&on(&claw, &["color2", "--verify"])), 3);
    assert_eq!(code(&on(&cycle(6).unwrap(), &["color-2tree"])), 3);
    assert_eq!(code(&on(&cycle(6).unwrap(), &["color-oddcycle"])), 3);
    assert_eq!(code(&on(&cycle(6).unwrap(), &["decompose"])), 3);
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(code(&cli(&["no-such-command"], "")), 1);
    assert_eq!(code(&cli(&["cliques"], "3 1\n0 0\n")), 1);
    assert_eq!(code(&cli(&["cliques", "-i", "/nonexistent/graph.el"], "")), 1);
    assert_eq!(code(&on(&cycle(5).unwrap(), &["oracle", "transversal", "--max-n", "26"])), 1);
    assert_eq!(code(&on(&cycle(5).unwrap(), &["cliques", "--max-n", "4"])), 1);
    assert_eq!(code(&on(&cycle(5).unwrap(), &["recognize", "--max-n", "1000"])), 1);
}

#[test]
fn color_subcommands_produce_valid_colorings() {
    let tree = gen_two_tree(40, 9).unwrap();
    let out = on(&tree, &["color-2tree", "--certify"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    let c = parse_coloring(lines.next().unwrap()).unwrap();
    assert!(is_clique_coloring(&tree, &c).unwrap().is_valid());
    assert_eq!(lines.filter(|l| l.starts_with("step ")).count(), 38);

    let tri = gen_apollonian(30, 4).unwrap();
    let out = on(&tri, &["color3max"]);
    assert_eq!(code(&out), 0);
    let c = parse_coloring(&stdout(&out)).unwrap();
    assert!(c.k() <= 3 && is_clique_coloring(&tri, &c).unwrap().is_valid());
}

#[test]
fn cliques_of_the_diamond() {
    let diamond = parse_edge_list("4 5\n0 1\n0 2\n1 2\n1 3\n2 3\n").unwrap();
    let out = on(&diamond, &["cliques"]);
    assert_eq!(stdout(&out), "0 1 2\n1 2 3\n");
}

#[test]
fn gen_output_round_trips_and_is_deterministic() {
    let a = cli(&["gen", "two-tree", "25", "--seed", "7"], "");
    let b = cli(&["gen", "--seed", "7", "two-tree", "25"], "");
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(parse_edge_list(&stdout(&a)).unwrap(), gen_two_tree(25, 7).unwrap());

    let lk6 = cli(&["gen", "l-k6"], "");
    assert_eq!(stdout(&lk6).lines().next(), Some("15 60"));
    let out = cli(&["oracle", "chromatic", "--max-k", "2"], &stdout(&lk6));
    assert_eq!((code(&out), stdout(&out)), (2, "exceeds 2\n".to_string()));

    let line = stdout(&cli(&["gen", "prism", "4", "--line"], ""));
    assert_eq!(line.lines().next(), Some("12 24"));

    let first = stdout(&cli(&["color2", "--certify"], &line));
    let again = stdout(&cli(&["color2", "--certify"], &line));
    assert_eq!(first, again);
}

#[test]
fn gen_wagner_sum_then_decompose() {
    let dir = tempfile::tempdir().unwrap();
    let bp = write(dir.path(), "bp.txt", "piece triangulation 6 glue2\npiece wagner 8 glue2\n");
    let out_path = dir.path().join("sum.el");
    let out = cli(&["gen", "wagner-sum", &bp, "--seed", "3", "-o", out_path.to_str().unwrap()], "");
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let g = parse_edge_list(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(g.n(), 12);

    let text = stdout(&on(&g, &["decompose"]));
    let pieces: Vec<&str> = text.lines().filter(|l| l.starts_with("piece ")).collect();
    assert_eq!(pieces.len(), 2);
    assert!(pieces.iter().any(|l| l.contains("kind=wagner")));
    assert!(pieces.iter().any(|l| l.contains("kind=triangulation")));
    assert_eq!(text.lines().filter(|l| l.starts_with("glue 0 1 boundary=")).count(), 1);
}
