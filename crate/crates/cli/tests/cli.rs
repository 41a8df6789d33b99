//! End-to-end checks of the command-line surface.

use std::path::PathBuf;
use std::process::{Command, Output};

fn mso(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mso"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = mso(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 output")
}

#[test]
fn compute_path_profile() {
    let text = stdout(&["compute", "--family", "path:3"]);
    assert!(text.contains("S(x) = 3x + 2x^2 + x^3"), "{text}");
    assert!(text.contains("mu = 5/3 = 1.666667"), "{text}");
    assert!(text.contains("Den = 5/9 = 0.555556"), "{text}");
}

#[test]
fn compute_triangle_spanning_proportion() {
    let text = stdout(&["compute", "--family", "cycle:3"]);
    assert!(text.contains("spanning trees = 3"), "{text}");
    assert!(text.contains("P(G) = 1/3 = 0.333333"), "{text}");
}

#[test]
fn compute_json_format() {
    let text = stdout(&["compute", "--family", "path:3", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["coeffs"], serde_json::json!(["0", "3", "2", "1"]));
    assert_eq!(value["mean"], "5/3");
    assert_eq!(value["mean_decimal"], "1.666667");
}

#[test]
fn compute_from_graph6_and_json_agree() {
    let via_g6 = stdout(&["compute", "--g6", "A_", "--format", "json"]);
    let via_json = stdout(&[
        "compute",
        "--json",
        r#"{"n":2,"edges":[[0,1,1]]}"#,
        "--format",
        "json",
    ]);
    let a: serde_json::Value = serde_json::from_str(&via_g6).unwrap();
    let b: serde_json::Value = serde_json::from_str(&via_json).unwrap();
    assert_eq!(a["coeffs"], b["coeffs"]);
    assert_eq!(a["mean"], b["mean"]);
}

#[test]
fn local_profile_of_cycle_edge() {
    let text = stdout(&["local", "--family", "cycle:5", "--edge", "0,1"]);
    assert!(text.contains("mu = 4 = 4.000000"), "{text}");
    assert!(text.contains("S(1) = 10"), "{text}");
}

#[test]
fn scan_reports_the_delta() {
    let text = stdout(&["scan", "--family", "path:3"]);
    assert!(text.contains("add 0,2"), "{text}");
    assert!(text.contains("delta 1/3 = 0.333333"), "{text}");
    assert!(text.contains("increases: true, decreases: false"), "{text}");
}

#[test]
fn search_small_order_summary() {
    let text = stdout(&["search", "--order", "4", "--mode", "conjecture1"]);
    assert_eq!(text.trim(), "order 4: 6 graphs scanned, 0 counterexamples");
}

#[test]
fn search_order7_finds_the_unique_counterexample() {
    let dir = std::env::temp_dir().join(format!("mso-cli-o7-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let report_path = dir.join("order7.json");
    let text = stdout(&[
        "search",
        "--order",
        "7",
        "--mode",
        "conjecture1",
        "--out",
        report_path.to_str().unwrap(),
    ]);
    assert_eq!(
        text.trim(),
        "order 7: 853 graphs scanned, 1 counterexample, max decrease 0.000588"
    );
    let witnesses = std::fs::read_to_string(dir.join("order7.g6")).unwrap();
    assert_eq!(witnesses.lines().count(), 1, "exactly one witness line");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn compute_multigraph_mean() {
    // doubled edge on two vertices: subtrees are 2 singles + 2 copies
    let text = stdout(&["compute", "--json", r#"{"n":2,"edges":[[0,1,2]]}"#]);
    assert!(text.contains("mu = 3/2 = 1.500000"), "{text}");
}

#[test]
fn search_order_bounds_are_reported() {
    let out = mso(&["search", "--order", "2", "--mode", "conjecture1"]);
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("below the minimum 3"), "{err}");

    let out = mso(&["search", "--order", "9", "--mode", "conjecture1"]);
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("exceeds the supported bound 8"), "{err}");
}

#[test]
fn search_json_report_is_deterministic() {
    let args = [
        "search",
        "--order",
        "5",
        "--mode",
        "conjecture2",
        "--format",
        "json",
    ];
    let mut first: serde_json::Value = serde_json::from_str(&stdout(&args)).unwrap();
    let mut second: serde_json::Value = serde_json::from_str(&stdout(&args)).unwrap();
    assert_eq!(first["conjecture2_holds"], serde_json::json!(true));
    first["elapsed_ms"] = serde_json::json!(0);
    second["elapsed_ms"] = serde_json::json!(0);
    assert_eq!(first, second);
}

#[test]
fn search_writes_report_and_witness_files() {
    let dir = std::env::temp_dir().join(format!("mso-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let report_path: PathBuf = dir.join("order5.json");
    let text = stdout(&[
        "search",
        "--order",
        "5",
        "--mode",
        "lemma4",
        "--out",
        report_path.to_str().unwrap(),
        "--workers",
        "2",
    ]);
    assert!(text.contains("0 counterexamples"), "{text}");
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report_path).unwrap()).unwrap();
    assert_eq!(report["order"], 5);
    assert_eq!(report["graphs_scanned"], 21);
    let witnesses = std::fs::read_to_string(dir.join("order5.g6")).unwrap();
    assert_eq!(witnesses, "");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_tree_theorem_on_a_path() {
    let text = stdout(&["verify", "--family", "path:3", "--mode", "tree-theorem"]);
    assert!(text.contains("branch vertex 1"), "{text}");
    assert!(
        text.contains("from 5/3 = 1.666667 to 2 = 2.000000"),
        "{text}"
    );
}

#[test]
fn family_emits_graph6() {
    let text = stdout(&["family", "--family", "complete:4"]);
    assert_eq!(text.trim(), "C~");
    let json = stdout(&["family", "--family", "gn:9:2", "--format", "json"]);
    let g: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(g["n"], 9);
}

#[test]
fn trends_csv_has_exact_and_decimal_columns() {
    let text = stdout(&[
        "trends",
        "--table",
        "path-cycle-gap",
        "--n",
        "3,4",
        "--format",
        "csv",
    ]);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,den_c,den_c_dec,den_p,den_p_dec,gap,gap_dec"
    );
    assert_eq!(
        lines.next().unwrap(),
        "3,2/3,0.666667,5/9,0.555556,1/9,0.111111"
    );
}

#[test]
fn trends_accepts_ranges() {
    let text = stdout(&["trends", "--table", "hn-gap", "--n", "8..10"]);
    assert_eq!(text.lines().count(), 4, "{text}");
}

#[test]
fn errors_exit_nonzero() {
    let out = mso(&["compute", "--family", "nope:3"]);
    assert!(!out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("unknown family"), "{err}");

    let out = mso(&["compute", "--g6", "A"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("graph6 parse error"));

    let out = mso(&["compute", "--family", "path:3", "--g6", "A_"]);
    assert!(!out.status.success());

    let out = mso(&["scan", "--json", r#"{"n":2,"edges":[]}"#]);
    assert!(!out.status.success());
}
