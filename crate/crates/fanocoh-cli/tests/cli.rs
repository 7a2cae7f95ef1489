//! Black-box tests against the built binary.

use std::process::{Command, Output};

fn fanocoh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fanocoh"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn bott_reports_the_normalization_case() {
    let out = fanocoh(&["bott", "--n", "3", "--r", "1", "--a", "3,1"]);
    let v = stdout_json(&out);
    assert_eq!(v["subcommand"], "bott");
    assert_eq!(
        v["outputs"]["cohomology"],
        serde_json::json!({"q": 2, "psi": [1, 1, 1, 1], "dim": "1"})
    );
    assert_eq!(v["outputs"]["grassmannian"]["dim"], 4);
}

#[test]
fn candidates_lists_ten_cases() {
    let out = fanocoh(&["candidates"]);
    let v = stdout_json(&out);
    let cases = v["outputs"]["cases"].as_array().expect("cases array");
    assert_eq!(cases.len(), 10);
    assert_eq!(cases[0]["label"], "1.1");
    assert_eq!(cases[9]["label"], "3");
    let labels: Vec<&str> = cases.iter().map(|c| c["label"].as_str().unwrap()).collect();
    assert!(labels.contains(&"1.3"));
}

#[test]
fn output_is_deterministic_across_runs() {
    let a = fanocoh(&["wedge", "--rank", "2", "--d", "2,2", "--t", "4"]);
    let b = fanocoh(&["wedge", "--rank", "2", "--d", "2,2", "--t", "4"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn koszul_emits_the_table_shape() {
    let out = fanocoh(&["koszul", "--n", "5", "--r", "1", "--d", "2", "--e", "2"]);
    let v = stdout_json(&out);
    let table = &v["outputs"]["table"];
    assert_eq!(table["byDegree"]["2"]["status"], "exact");
    assert_eq!(table["byDegree"]["2"]["dim"], "1");
    let cells = table["cells"].as_array().expect("cells");
    assert_eq!(cells.len(), 1);
    assert_eq!(cells[0]["t"], 2);
    assert_eq!(cells[0]["q"], 4);
    assert_eq!(cells[0]["terms"][0]["partition"], serde_json::json!([1, 1, 1, 1, 1, 1]));
    assert_eq!(v["outputs"]["values"]["2"]["kind"], "exact");
}

#[test]
fn intersect_solves_the_frozen_class() {
    let out = fanocoh(&[
        "intersect", "--n", "7", "--d", "3", "--g", "21", "--l2", "2835",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["outputs"]["pushforward"]["nCanonical"], "30");
    assert_eq!(v["outputs"]["pairingFactor"], "180");
    assert_eq!(
        v["outputs"]["classes"]["y"],
        serde_json::json!({"num": "12", "den": "1"})
    );
    assert_eq!(
        v["outputs"]["classes"]["x"],
        serde_json::json!({"num": "3", "den": "4"})
    );
}

#[test]
fn bad_input_exits_one() {
    let out = fanocoh(&["bott", "--n", "3", "--r", "1", "--a", "1,3"]);
    assert_eq!(out.status.code(), Some(1));
    let out = fanocoh(&["obstructions", "--case", "9.9"]);
    assert_eq!(out.status.code(), Some(1));
    let out = fanocoh(&["betti", "--n", "1", "--d", "3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn text_mode_is_compact() {
    let out = fanocoh(&["classify", "--n", "6", "--r", "1", "--d", "2,2", "--text"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("TwoQuadrics"));
    assert!(text.contains("rho = 8"));
    assert!(!text.trim_start().starts_with('{'));
}
