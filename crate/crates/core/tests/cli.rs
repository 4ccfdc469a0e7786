//! End-to-end checks of the `curvespec` binary: output bytes, formats
//! and the exit-code contract.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_curvespec"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn spectrum_text() {
    let out = run(&["spectrum", "--pairs", "3,2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("5/6"));
    assert!(text.contains("7/6"));
    assert_eq!(text.trim_end().lines().count(), 3); // header + 2 rows
}

#[test]
fn spectrum_csv() {
    let out = run(&["spectrum", "--pairs", "5,2", "--format", "csv"]);
    let text = stdout(&out);
    assert!(text.starts_with("exponent,approx,multiplicity\n"));
    assert!(text.contains("7/10,0.7,1\n"));
    assert_eq!(text.trim_end().lines().count(), 5);
}

#[test]
fn spectrum_json() {
    let out = run(&["spectrum", "--pairs", "3,2", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(rows[0]["alpha"], "5/6");
    assert_eq!(rows[0]["mult"], 1);
    assert_eq!(rows[1]["alpha"], "7/6");
}

#[test]
fn spectrum_invalid_input() {
    let out = run(&["spectrum", "--pairs", "4,2"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("gcd(4,2)"), "stderr: {err}");
}

#[test]
fn resolution_table() {
    let out = run(&["resolution", "--pairs", "3,2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("D[1,2,2]"));
    assert!(text.contains("lct = 5/6"));
    assert!(text.contains("rupture D[1,2,2] (stage 1): m = 6, neighbours 2, 3, 1"));
}

#[test]
fn resolution_dot() {
    let out = run(&["resolution", "--pairs", "3,2", "--dot", "dual"]);
    let text = stdout(&out);
    assert!(text.starts_with("graph dual {"));
    // 3 white vertices + proper transform
    assert_eq!(text.matches("shape=circle").count(), 3);
    assert_eq!(text.matches("shape=square").count(), 1);
    let again = stdout(&run(&["resolution", "--pairs", "3,2", "--dot", "dual"]));
    assert_eq!(text, again);
}

#[test]
fn resolution_rejects_small_first_pair() {
    assert_eq!(run(&["resolution", "--pairs", "1,2"]).status.code(), Some(1));
}

#[test]
fn resolution_guard_limit() {
    let out = Command::new(env!("CARGO_BIN_EXE_curvespec"))
        .args(["resolution", "--pairs", "10007,2"])
        .env("CURVESPEC_MAX_VERTICES", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_ok_and_sweep() {
    let out = run(&["verify", "--pairs", "3,2;1,2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("0 failure(s)"));

    let out = run(&["verify", "--sweep", "g<=2,k<=9,n<=4,count=10,seed=7"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("10 case(s)"));
}

#[test]
fn verify_fault_injection() {
    let out = run(&["verify", "--pairs", "3,2", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn verify_needs_exactly_one_source() {
    assert_eq!(run(&["verify"]).status.code(), Some(1));
}

#[test]
fn report_values_and_determinism() {
    let out = run(&["report", "--pairs", "3,2"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["characteristic"]["milnor_number"], "2");
    assert_eq!(json["resolution"]["log_canonical_threshold"]["exact"], "5/6");
    assert_eq!(json["variance"]["gap"]["exact"], "0");
    assert_eq!(json["verification"]["all_pass"], true);

    let out2 = run(&["report", "--pairs", "3,2"]);
    assert_eq!(out.stdout, out2.stdout);

    let out = run(&["report", "--pairs", "3,2;1,2"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["variance"]["gap"]["exact"], "7/7488");
}
