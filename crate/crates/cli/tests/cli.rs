use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rankspectra"))
        .args(args)
        .env_remove("RANKSPECTRA_POINT_LIMIT")
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn weights(v: &Value) -> Vec<u64> {
    v["weights"].as_array().unwrap().iter().map(|w| w.as_u64().unwrap()).collect()
}

/// Builds a code file and returns its path.
fn build(name: &str, n: &str, m: &str, k: &str, extra: &[&str]) -> PathBuf {
    let path = scratch(name);
    let p = path.to_str().unwrap();
    let mut args = vec!["construct", "--n", n, "--m", m, "--k", k, "--witnesses", "--out", p];
    args.extend_from_slice(extra);
    let out = run(&args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    path
}

#[test]
fn lrk_values() {
    for (n, m, k, expect) in [("7", "7", "2", 5), ("21", "7", "3", 1), ("9", "6", "3", 5), ("40", "10", "4", 1)] {
        let v = json(&["lrk", "--n", n, "--m", m, "--k", k]);
        assert_eq!(v["lrk"], expect, "({n},{m},{k})");
        assert_eq!(v["expected_spectrum"].as_array().unwrap().len(), expect as usize);
    }
    let v = json(&["lrk", "--n", "9", "--m", "6", "--k", "3", "--q", "3"]);
    assert_eq!(v["lrk"], 5);
}

#[test]
fn table_rows_match_lrk() {
    let out = run(&["table", "--m", "7", "--k", "3", "--n-max", "21"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,m,k,q,lrk,regime,s_or_h,fws"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 21 - 3);
    assert_eq!(rows.first().unwrap()[0], "4");
    assert_eq!(rows.last().unwrap()[4], "1");
    for row in rows.iter().step_by(5) {
        let v = json(&["lrk", "--n", row[0], "--m", "7", "--k", "3"]);
        assert_eq!(v["lrk"].to_string(), row[4]);
    }
    let v = json(&["table", "--m", "7", "--k", "3", "--n-max", "21", "--format", "json"]);
    assert_eq!(v.as_array().unwrap().len(), 18);
}

#[test]
fn construct_profiles() {
    let v = json(&["construct", "--n", "7", "--m", "7", "--k", "3", "--profile-only"]);
    assert_eq!(v["blocks"], serde_json::json!([4, 2, 1]));
    let v = json(&["construct", "--n", "12", "--m", "3", "--k", "10", "--profile-only"]);
    let blocks: Vec<u64> = v["blocks"].as_array().unwrap().iter().map(|b| b.as_u64().unwrap()).collect();
    assert_eq!(blocks.iter().sum::<u64>(), 12);
    assert_eq!(blocks.len(), 10);
}

#[test]
fn spectrum_methods_agree() {
    let path = build("c772.json", "7", "7", "2", &[]);
    let v = json(&["spectrum", "--input", path.to_str().unwrap(), "--method", "both"]);
    assert_eq!(weights(&v["exhaustive"]), vec![3, 4, 5, 6, 7]);
    assert_eq!(weights(&v["witness"]), vec![3, 4, 5, 6, 7]);
    assert_eq!(v["exhaustive"]["points_examined"], 129);

    let path = build("simplex.json", "6", "3", "2", &[]);
    let v = json(&["spectrum", "--input", path.to_str().unwrap()]);
    assert_eq!(weights(&v), vec![3]);
}

#[test]
fn large_codes_use_witnesses() {
    let path = build("c15.json", "15", "10", "4", &[]);
    let p = path.to_str().unwrap();
    let v = json(&["spectrum", "--input", p, "--method", "witness"]);
    assert_eq!(weights(&v), (1..=10).collect::<Vec<_>>());

    let path = build("c40.json", "40", "10", "4", &[]);
    let p = path.to_str().unwrap();
    assert_eq!(weights(&json(&["spectrum", "--input", p, "--method", "witness"])), vec![10]);
    let out = run(&["spectrum", "--input", p]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("1074791425"));
}

#[test]
fn point_limit_from_environment() {
    let path = build("c772_env.json", "7", "7", "2", &[]);
    let p = path.to_str().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_rankspectra"))
        .args(["spectrum", "--input", p])
        .env("RANKSPECTRA_POINT_LIMIT", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(run(&["spectrum", "--input", p, "--limit", "129"]).status.code(), Some(0));
    assert_eq!(run(&["spectrum", "--input", p, "--limit", "128"]).status.code(), Some(3));
}

#[test]
fn bad_input_exits_with_two() {
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["lrk", "--n", "5", "--m", "3", "--k", "2", "--q", "6"]).status.code(), Some(2));
    assert_eq!(run(&["construct", "--n", "22", "--m", "7", "--k", "3"]).status.code(), Some(2));
    assert_eq!(run(&["spectrum", "--input", "/nonexistent/code.json"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let a = run(&["construct", "--n", "10", "--m", "6", "--k", "4", "--witnesses"]);
    let b = run(&["construct", "--n", "10", "--m", "6", "--k", "4", "--witnesses"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let a = run(&["verify", "--suite", "lemmas"]);
    let b = run(&["verify", "--suite", "lemmas"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_suites() {
    for suite in ["psi", "duality", "geometry", "classification"] {
        let out = run(&["verify", "--suite", suite]);
        assert!(out.status.success(), "{suite}");
        assert!(String::from_utf8_lossy(&out.stdout).contains("PASS"));
    }
}

#[test]
fn dual_and_geometry() {
    let path = build("c442.json", "4", "4", "2", &[]);
    let out_path = scratch("c442_dual.json");
    let v = json(&[
        "dual",
        "--input",
        path.to_str().unwrap(),
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(v["nondegenerate"], true);
    assert_eq!(v["n"], 4);
    assert_eq!(v["k"], 2);
    assert_eq!(weights(&v["spectrum"]), vec![2, 3, 4]);
    // the written dual is a valid code file
    let w = json(&["spectrum", "--input", out_path.to_str().unwrap()]);
    assert_eq!(weights(&w), vec![2, 3, 4]);

    let path = build("c772_geo.json", "7", "7", "2", &[]);
    let v = json(&["geometry", "--input", path.to_str().unwrap()]);
    assert_eq!(v["all_points"], true);
    assert_eq!(v["points_checked"], 129);
    assert!(v["mismatches"].as_array().unwrap().is_empty());
    assert_eq!(v["system"]["dim"], 7);
    assert_eq!(v["geometric_dual_dim"], 7);
}
