//! End-to-end runs of the `tdcontract` binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tdcontract::generators::{claw, cycle, linear_forest, path};
use tdcontract::Graph;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tdcontract"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn save(dir: &Path, name: &str, g: &Graph) -> String {
    let p = dir.join(name);
    fs::write(&p, g.to_edge_list()).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn basic_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let c6 = save(dir.path(), "c6.el", &cycle(6).unwrap());
    let c8 = save(dir.path(), "c8.el", &cycle(8).unwrap());
    let p4 = save(dir.path(), "p4.el", &path(4));
    assert_eq!(stdout(&["decide", &c6]), "YES\n");
    assert_eq!(stdout(&["decide", &c8]), "NO\n");
    assert_eq!(stdout(&["gammat", &p4]), "2\n");
    assert_eq!(stdout(&["gamma", &c6]), "2\n");
    assert_eq!(stdout(&["ct", &c8]), "3\n");
    assert_eq!(stdout(&["ct", &c8, "--max-depth", "2"]), "irreducible\n");
}

#[test]
fn decide_methods_agree() {
    let dir = tempfile::tempdir().unwrap();
    let c8 = save(dir.path(), "c8.el", &cycle(8).unwrap());
    let hint = save(dir.path(), "h.el", &linear_forest(&[4, 3]));
    for m in ["auto", "oracle", "p4kp3=1", "p4kp3=2"] {
        assert_eq!(stdout(&["decide", &c8, "--method", m]), "NO\n", "{m}");
    }
    assert_eq!(stdout(&["decide", &c8, "--hint", &hint]), "NO\n");
    let c5 = save(dir.path(), "c5.el", &cycle(5).unwrap());
    assert_eq!(stdout(&["decide", &c5, "--method", "p5free"]), "YES\n");
    let out = run(&["decide", &c8, "--method", "p5free"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn classify_h_output() {
    let dir = tempfile::tempdir().unwrap();
    let h = save(dir.path(), "claw.el", &claw());
    let text = stdout(&["classify-h", &h]);
    assert_eq!(text.lines().next(), Some("coNP-hard (claw branch)"));
    assert_eq!(text.lines().count(), 2);
    let h = save(dir.path(), "p5.el", &linear_forest(&[5, 1, 1]));
    assert!(stdout(&["classify-h", &h]).starts_with("polynomial (within-family branch)\n"));
}

#[test]
fn compile_writes_graph_and_roles() {
    let dir = tempfile::tempdir().unwrap();
    let p10 = save(dir.path(), "p10.el", &path(10));
    let out = dir.path().join("g.el");
    let out_s = out.to_str().unwrap();
    assert_eq!(stdout(&["compile", "even-ds", "--ell", "2", &p10, out_s]), "54\n");
    let g = Graph::parse_edge_list(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(g.n(), 54);
    let roles = fs::read_to_string(dir.path().join("g.el.roles")).unwrap();
    assert_eq!(roles.lines().count(), 54);
    assert!(roles.lines().any(|l| l == "V0[v2] 6"));
    assert_eq!(stdout(&["gammat", out_s]), "4\n");

    let cnf = dir.path().join("f.cnf");
    fs::write(&cnf, "p cnf 3 3\n1 2 3 0\n1 2 3 0\n1 2 3 0\n").unwrap();
    let cnf_s = cnf.to_str().unwrap();
    assert_eq!(stdout(&["compile", "claw-1in3", cnf_s, out_s]), "174\n");
    assert_eq!(stdout(&["compile", "sat-2p4", cnf_s, out_s]), "15\n");
    let c3 = save(dir.path(), "c3.el", &cycle(3).unwrap());
    assert_eq!(stdout(&["compile", "subdiv4", &c3, out_s]), "15\n");
    assert_eq!(stdout(&["gammat", out_s]), "8\n");
}

#[test]
fn gen_and_lemma_are_deterministic() {
    let a = stdout(&["gen", "random", "9", "0.3", "--seed", "5"]);
    assert_eq!(a, stdout(&["gen", "random", "9", "0.3", "--seed", "5"]));
    assert!(Graph::parse_edge_list(&a).unwrap().is_connected());
    assert_eq!(stdout(&["gen", "star", "3"]), "4 3\n0 1\n0 2\n0 3\n");
    let args = ["verify-lemma", "claim9", "--n", "5", "--samples", "10", "--seed", "2"];
    let first = stdout(&args);
    assert_eq!(first, stdout(&args));
    assert_eq!(first, "PASS samples=10 agreements=10 inconclusive=0\n");
    for lemma in ["p3-criterion", "claim1", "contraction-bound", "gadget"] {
        assert!(stdout(&["verify-lemma", lemma, "--samples", "5"]).starts_with("PASS"));
    }
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.el");
    fs::write(&bad, "3 2\n0 1\n1 1\n").unwrap();
    let out = run(&["gammat", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    assert_eq!(run(&["decide", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["gammat", "/no/such/file"]).status.code(), Some(2));
    let isolated = save(dir.path(), "iso.el", &Graph::new(2));
    assert_eq!(run(&["gammat", &isolated]).status.code(), Some(2));
    let p10 = save(dir.path(), "p10.el", &path(10));
    let out = dir.path().join("x.el");
    assert_eq!(run(&["compile", "even-ds", "--ell", "0", &p10, out.to_str().unwrap()]).status.code(), Some(2));
}
