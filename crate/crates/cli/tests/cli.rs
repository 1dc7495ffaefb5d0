use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_thetabar")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

fn generate(args: &[&str]) -> String {
    let mut full = vec!["generate"];
    full.extend_from_slice(args);
    stdout(&full).trim().to_string()
}

#[test]
fn generate_families() {
    assert_eq!(generate(&["complete", "3"]), "Bw");
    assert_eq!(generate(&["path", "4"]), "Ch");
    assert_eq!(generate(&["multipartite", "1,2,4"]), "Fvzf?");
    let rook = generate(&["product", "K3", "K2"]);
    assert_eq!(json(&["classify", &rook])["m"], 9);
    let wheel = generate(&["join", "C4", "K1"]);
    assert_eq!(json(&["classify", &wheel])["m"], 8);
    assert_eq!(json(&["classify", &generate(&["star", "3"])])["n"], 4);
    assert_eq!(json(&["classify", &generate(&["pattern", "paw"])])["is_paw_free"], false);
}

#[test]
fn classes_fast_and_closure_agree() {
    let g = generate(&["multipartite", "1,2,4"]);
    let slow = json(&["classes", &g]);
    let fast = json(&["classes", &g, "--fast"]);
    assert_eq!(slow["class_sizes"], serde_json::json!([2, 4, 8]));
    assert_eq!(slow["classes"], fast["classes"]);
    assert_eq!(fast["method"], "distance-free");
    assert_eq!(fast["verified"], true);
    assert_eq!(slow["triviality"]["kind"], "neither");
    let skipped = json(&["classes", &g, "--fast", "--no-verify"]);
    assert_eq!(skipped["verified"], Value::Null);
}

#[test]
fn classes_theta_on_tree() {
    let v = json(&["classes", &generate(&["path", "5"]), "--which", "theta"]);
    assert_eq!(v["class_count"], 4);
    assert_eq!(v["closed"], true);
}

#[test]
fn fast_rejects_theta() {
    let out = run(&["classes", "Bw", "--which", "theta", "--fast"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn classify_tree() {
    let v = json(&["classify", &generate(&["star", "4"])]);
    assert_eq!(v["is_tree"], true);
    assert_eq!(v["theta_bar_star_trivial"], true);
    assert_eq!(v["theta_bar_class_count"], 1);
}

#[test]
fn relation_outputs() {
    let c4 = generate(&["cycle", "4"]);
    let pairs = stdout(&["relation", &c4]);
    // opposite edges of C4 are Θ-related, adjacent ones are not
    assert_eq!(pairs.lines().count(), 4);
    let theta = stdout(&["relation", &c4, "--which", "theta"]);
    assert_eq!(theta.lines().count(), 2);
    let dot = stdout(&["relation", &c4, "--dot"]);
    assert!(dot.starts_with("graph"));
    assert_eq!(dot.matches("--").count(), 4);
}

#[test]
fn realize_round_trip() {
    let g = generate(&["multipartite", "1,1,2"]);
    let w = stdout(&["relation", &g, "--graph6"]);
    let v = json(&["realize", w.trim()]);
    assert_eq!(v["realizable"], true);
    let mut parts: Vec<u64> = v["parts"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
    parts.sort_unstable();
    assert_eq!(parts, [1, 1, 2]);
}

#[test]
fn realize_rejects_c5() {
    let w = stdout(&["relation", &generate(&["cycle", "5"]), "--graph6"]);
    let v = json(&["realize", w.trim()]);
    assert_eq!(v["realizable"], false);
    assert!(v["reason"].as_str().unwrap().contains("components"));
}

#[test]
fn realize_from_stdin_pair_list() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_thetabar"))
        .args(["realize", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(br#"{"vertices": 6, "pairs": [[0, 5], [1, 4], [2, 3]]}"#).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["realizable"], true);
    assert_eq!(v["case"], "l4");
}

#[test]
fn verify_small_corpus() {
    let out = run(&["verify", "--max-n", "5"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["graphs"], 31);
    assert_eq!(v["passed"], true);
    assert!(String::from_utf8_lossy(&out.stderr).lines().all(|l| l.starts_with("pass ")));
}

#[test]
fn verify_builtin_limit() {
    assert_eq!(run(&["verify", "--max-n", "9"]).status.code(), Some(2));
}

#[test]
fn malformed_input_exits_2() {
    let out = run(&["classify", "~~~"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    assert_eq!(run(&["classify", "Bw", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["realize", "{\"vertices\": 2, \"pairs\": [[0, 5]]}"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let g = generate(&["product", "K3", "K3"]);
    for args in [vec!["classify", g.as_str()], vec!["classes", g.as_str()], vec!["verify", "--max-n", "4"]] {
        assert_eq!(run(&args).stdout, run(&args).stdout, "{args:?}");
    }
}
