use std::io::Write;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

fn kegraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kegraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn graph_file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn analyze_fixture() {
    let out = kegraph(&["analyze", "--fixture", "k3_plus_e"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["alpha"], 2);
    assert_eq!(v["mu"], 2);
    assert_eq!(v["is_ke"], true);
    assert_eq!(v["mu_critical_edges"], serde_json::json!([[0, 3], [1, 2]]));
}

#[test]
fn analyze_output_is_byte_stable() {
    let a = kegraph(&["analyze", "--fixture", "fig9_forest"]);
    let b = kegraph(&["analyze", "--fixture", "fig9_forest"]);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.find("\"n\"").unwrap() < text.find("\"equalities\"").unwrap());
}

#[test]
fn verify_tree_file() {
    let f = graph_file("# random tree\n7 6\n0 1\n1 2\n1 3\n3 4\n4 5\n4 6\n");
    let out = kegraph(&[
        "verify",
        "--checks",
        "C1",
        "--input",
        f.path().to_str().unwrap(),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v[0]["status"], "pass");
}

#[test]
fn failing_check_exits_one_with_reusable_witness() {
    let out = kegraph(&["verify", "--fixture", "w1", "--checks", "P7-unguarded"]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let witness = v[0]["witness"]["graph"].as_str().unwrap();
    let f = graph_file(witness);
    let again = kegraph(&[
        "verify",
        "--input",
        f.path().to_str().unwrap(),
        "--checks",
        "P7-unguarded",
    ]);
    assert_eq!(again.status.code(), Some(1));
}

#[test]
fn decompose_c5_is_refused() {
    let f = graph_file("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    let out = kegraph(&["decompose", "--input", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a König-Egerváry graph"));
}

#[test]
fn decompose_ke_graph() {
    let out = kegraph(&["decompose", "--fixture", "c6"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["s"], serde_json::json!([0, 2, 4]));
}

#[test]
fn input_errors_exit_two() {
    let bad = graph_file("3 2\n0 1\n");
    assert_eq!(
        kegraph(&["analyze", "--input", bad.path().to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        kegraph(&["analyze", "--input", "/nonexistent/graph.txt"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        kegraph(&["verify", "--fixture", "c4", "--checks", "Z9"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        kegraph(&["analyze", "--fixture", "nope"]).status.code(),
        Some(2)
    );
}

#[test]
fn capacity_exits_three() {
    let out = kegraph(&["analyze", "--fixture", "c6", "--max-n", "4"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn dot_marks_classes() {
    let out = kegraph(&["analyze", "--fixture", "k3_plus_e", "--format", "dot"]);
    let dot = stdout(&out);
    assert!(dot.starts_with("graph G {"));
    assert!(dot.contains("3 [class=core];"));
    assert!(dot.contains("0 -- 3 [class=\"mu_critical\"];"));
    assert!(dot.contains("1 -- 2 [class=\"alpha_critical mu_critical\"];"));
}

#[test]
fn critical_report() {
    let out = kegraph(&["critical", "--fixture", "w1"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["eta"], 3);
    assert_eq!(v["mu_critical_edges"], serde_json::json!([]));
}

#[test]
fn fixtures_list_and_emit() {
    let list = stdout(&kegraph(&["fixtures"]));
    assert!(list.lines().any(|l| l.starts_with("fig7_g0\t")));
    let emitted = stdout(&kegraph(&["fixtures", "fig9_forest"]));
    assert!(emitted.contains("# 6 = z"));
    let f = graph_file(&emitted);
    let out = kegraph(&["analyze", "--input", f.path().to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["alpha"], 4);
}

#[test]
fn fuzz_is_deterministic() {
    let args = [
        "fuzz", "--gen", "ke", "--n", "9", "--p", "0.3,0.6", "--trials", "40", "--seed", "17",
        "--checks", "T2,P7,L3",
    ];
    let a = kegraph(&args);
    let b = kegraph(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["per_check"]["T2"]["fail"], 0);
}

#[test]
fn fuzz_reports_negative_control() {
    let out = kegraph(&[
        "fuzz",
        "--gen",
        "gnp",
        "--n",
        "7",
        "--p",
        "0.9",
        "--trials",
        "10",
        "--checks",
        "P3-unguarded",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(!v["witnesses"].as_array().unwrap().is_empty());
}
