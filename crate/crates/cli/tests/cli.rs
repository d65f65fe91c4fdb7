use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn domlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_domlab"))
        .args(args)
        .env_remove("DOMLAB_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn solve_prints_value_and_certificate() {
    let o = domlab(&["solve", "--family", "cycle-clique", "--n", "6", "--m", "3", "--param", "dom"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("gamma = 4"));
    assert_eq!(lines.filter(|l| l.starts_with('(')).count(), 4);
}

#[test]
fn solve_json_reports_the_value() {
    let o = domlab(&[
        "solve", "--family", "path-clique", "--n", "5", "--m", "4", "--param", "sdom", "--format", "json",
    ]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["value"], 7);
}

#[test]
fn canonical_single_thread_output_is_deterministic() {
    let args = [
        "solve", "--family", "path-clique", "--n", "6", "--m", "4", "--param", "sdom", "--threads", "1",
        "--canonical",
    ];
    let first = stdout(&domlab(&args));
    for _ in 0..3 {
        assert_eq!(stdout(&domlab(&args)), first);
    }
}

#[test]
fn budget_exhaustion_exits_five() {
    let o = domlab(&["solve", "--family", "path-clique", "--n", "9", "--m", "5", "--param", "sdom", "--budget", "10"]);
    assert_eq!(code(&o), 5);
    let o = Command::new(env!("CARGO_BIN_EXE_domlab"))
        .args(["solve", "--family", "path-clique", "--n", "9", "--m", "5", "--param", "sdom"])
        .env("DOMLAB_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(code(&o), 5);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&domlab(&["solve", "--family", "star", "--n", "3", "--m", "3", "--param", "dom"])), 2);
    assert_eq!(code(&domlab(&["frobnicate"])), 2);
}

#[test]
fn unreadable_input_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.txt");
    let o = domlab(&["solve", "--graph", missing.to_str().unwrap(), "--param", "dom"]);
    assert_eq!(code(&o), 3);
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "3\n0 7\n").unwrap();
    assert_eq!(code(&domlab(&["solve", "--graph", bad.to_str().unwrap(), "--param", "dom"])), 3);
}

#[test]
fn guard_violations_exit_four() {
    let o = domlab(&["formula", "--family", "path-clique", "--param", "idom", "--n", "3", "--m", "4"]);
    assert_eq!(code(&o), 4);
    let o = domlab(&["construct", "--kind", "dom-cycle", "--n", "5", "--m", "3"]);
    assert_eq!(code(&o), 4);
}

#[test]
fn verify_accepts_a_row_and_rejects_a_gap() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("row.txt");
    let row: String = (1..=6).map(|i| format!("{i} 1\n")).collect();
    fs::write(&cert, row).unwrap();
    let base = ["verify", "--family", "cycle-clique", "--n", "6", "--m", "3", "--set", cert.to_str().unwrap()];

    let o = domlab(&[&base[..], &["--param", "dom"]].concat());
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "OK (dominating)");

    let o = domlab(&[&base[..], &["--param", "sdom", "--defenders"]].concat());
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().filter(|l| l.contains("<-")).count(), 12);

    fs::write(&cert, "1 1\n2 1\n").unwrap();
    let o = domlab(&[&base[..], &["--param", "dom", "--format", "json"]].concat());
    assert_eq!(code(&o), 1);
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["ok"], false);
    assert_eq!(v["size"], 2);
}

#[test]
fn construct_lists_the_first_row() {
    let o = domlab(&["construct", "--kind", "sdom-cycle-row", "--n", "6", "--m", "4"]);
    assert_eq!(code(&o), 0);
    let expected: Vec<String> = (1..=6).map(|i| format!("({i} 1)")).collect();
    assert_eq!(stdout(&o).lines().collect::<Vec<_>>(), expected);

    let o = domlab(&["construct", "--kind", "sdom-cycle-row", "--n", "6", "--m", "4", "--verify"]);
    assert!(stdout(&o).lines().any(|l| l == "# sdom: OK"));
}

#[test]
fn formula_names_its_source() {
    let o = domlab(&["formula", "--family", "path-clique", "--param", "sdom", "--n", "5", "--m", "4"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).trim(), "gamma_s = 7 (sdom-path-wide)");
}

#[test]
fn erratum_refutes_all_three_claims() {
    let o = domlab(&["erratum"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.ends_with("REFUTED")).count(), 3);

    let o = domlab(&["erratum", "--which", "gravier-bound", "--format", "json"]);
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!((v["claimed"].as_u64(), v["exact"].as_u64()), (Some(4), Some(5)));
    assert_eq!(v["verdict"], "REFUTED");
}

#[test]
fn table_summarises_agreement() {
    let o = domlab(&[
        "table", "--param", "dom", "--family", "cycle-clique", "--n-range", "6..8", "--m-range", "3..4",
        "--with-solver", "--with-construction",
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("AGREEMENTS 6/6, DISCREPANCIES 0"), "{}", stdout(&o));

    let o = domlab(&[
        "table", "--param", "sdom", "--family", "path-clique", "--n-range", "3..3", "--m-range", "4..4",
        "--with-solver", "--format", "json",
    ]);
    let row: Value = serde_json::from_str(stdout(&o).lines().next().unwrap()).unwrap();
    for key in ["family", "param", "n", "m", "formula", "solver", "construction", "construction_valid", "agree"] {
        assert!(row.get(key).is_some(), "missing {key}");
    }
    assert_eq!((row["formula"].as_u64(), row["solver"].as_u64()), (Some(5), Some(4)));
    assert_eq!(row["agree"], false);
}

#[test]
fn generated_graphs_solve_like_named_families() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c6k3.txt");
    let o = domlab(&["gen", "--family", "cycle-clique", "--n", "6", "--m", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let o = domlab(&["solve", "--graph", path.to_str().unwrap(), "--param", "dom"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().next(), Some("gamma = 4"));

    let o = domlab(&["gen", "--base", "cycle", "--n", "5"]);
    assert!(stdout(&o).lines().count() >= 5);
}
