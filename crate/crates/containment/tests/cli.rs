use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_containment")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn write_graph(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn json(text: &str) -> serde_json::Value {
    serde_json::from_str(text).unwrap()
}

#[test]
fn gen_writes_header() {
    assert!(stdout(&["gen", "--n", "5", "--p", "1"]).starts_with("5 10\n"));
    assert_eq!(stdout(&["gen", "--n", "5", "--p", "0"]), "5 0\n");
    assert_eq!(run(&["gen", "--n", "5", "--p", "1.5"]).status.code(), Some(2));
}

#[test]
fn solve_small_graphs() {
    let dir = TempDir::new().unwrap();
    let k2 = write_graph(dir.path(), "k2.txt", "2 1\n0 1\n");
    assert_eq!(json(&stdout(&["solve", &k2, "--number"]))["xi"], 1);
    let star = write_graph(dir.path(), "star.txt", "4 3\n0 1\n0 2\n0 3\n");
    assert_eq!(json(&stdout(&["solve", &star, "--k", "2"]))["value"], "RobberWin");
    assert_eq!(json(&stdout(&["solve", &star, "--k", "3"]))["value"], "CopWin");
    let rep = json(&stdout(&["solve", &star]));
    assert_eq!((&rep["xi"], &rep["c"], &rep["gamma"], &rep["delta"]), (&3.into(), &1.into(), &1.into(), &3.into()));
    assert_eq!(run(&["solve", &star, "--k", "2", "--number"]).status.code(), Some(2));
    assert_eq!(run(&["solve", &star, "--budget", "3"]).status.code(), Some(3));
    assert_eq!(run(&["solve", "/nonexistent/graph.txt"]).status.code(), Some(1));
}

#[test]
fn play_strategies() {
    let dir = TempDir::new().unwrap();
    let c4 = write_graph(dir.path(), "c4.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n");
    let out = stdout(&["play", &c4, "--cops", "matching", "--robber", "greedy_robber"]);
    assert!(out.starts_with("CopWin after 1 rounds"), "{out}");
    let out = stdout(&["play", &c4, "--cops", "everywhere", "--robber", "sitting_robber", "--k", "4"]);
    assert!(out.starts_with("CopWin after 0 rounds"), "{out}");

    let trace = dir.path().join("t.json");
    stdout(&[
        "play",
        &c4,
        "--cops",
        r#"{"strategy":"random_cops","params":{}}"#,
        "--robber",
        "evasion",
        "--k",
        "1",
        "--max-rounds",
        "5",
        "--trace",
        trace.to_str().unwrap(),
    ]);
    let rec = json(&fs::read_to_string(&trace).unwrap());
    assert_eq!(rec["trace"]["outcome"], "RobberSurvived");
    assert_eq!(rec["seed"], containment::experiments::config::DEFAULT_SEED);

    assert_eq!(run(&["play", &c4, "--cops", "nonsense", "--robber", "evasion"]).status.code(), Some(2));
    let star = write_graph(dir.path(), "star.txt", "4 3\n0 1\n0 2\n0 3\n");
    assert_eq!(run(&["play", &star, "--cops", "matching", "--robber", "evasion"]).status.code(), Some(2));
}

#[test]
fn sweep_validation_and_manifest() {
    let dir = TempDir::new().unwrap();
    let base = fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/configs/sweep-minimal.toml")).unwrap();
    let bad = write_graph(dir.path(), "bad.toml", &base.replace("trials = 1", "trials = 0"));
    let out = run(&["sweep", &bad, "--out", dir.path().join("x").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 4"));

    let good = write_graph(dir.path(), "good.toml", &format!("{base}seed = 99\n"));
    let out_dir = dir.path().join("sweep");
    stdout(&["sweep", &good, "--out", out_dir.to_str().unwrap()]);
    let manifest = json(&fs::read_to_string(out_dir.join("manifest.json")).unwrap());
    assert_eq!(manifest["seed"], 99);
    let records = fs::read_to_string(out_dir.join("records.csv")).unwrap();
    assert_eq!(records.lines().count(), 4);
    assert_eq!(fs::read_to_string(out_dir.join("paired_violations.json")).unwrap().trim(), "[]");
}

#[test]
fn small_audit_is_clean() {
    let dir = TempDir::new().unwrap();
    let out_dir = dir.path().join("audit");
    let text = stdout(&["audit", "--nmax", "4", "--out", out_dir.to_str().unwrap()]);
    assert!(text.contains("audited 10 graphs"), "{text}");
    assert_eq!(fs::read_to_string(out_dir.join("conjecture_violations.g6")).unwrap(), "");
    assert_eq!(fs::read_to_string(out_dir.join("chain_violations.g6")).unwrap(), "");
    assert_eq!(fs::read_to_string(out_dir.join("audit.csv")).unwrap().lines().count(), 11);
    assert_eq!(run(&["audit", "--nmax", "9"]).status.code(), Some(2));
}

#[test]
fn enumerate_matches_counts() {
    let dir = TempDir::new().unwrap();
    let p = dir.path().join("g.g6");
    stdout(&["enumerate", "--n", "5", "--up-to", "--connected", "--out", p.to_str().unwrap()]);
    assert_eq!(fs::read_to_string(&p).unwrap().lines().count(), 1 + 1 + 2 + 6 + 21);
}
