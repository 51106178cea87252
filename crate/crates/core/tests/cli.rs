use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_theta-forms")).args(args).output().expect("binary runs")
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is json")
}

#[test]
fn build_writes_artifact() {
    let path = tmp("psi_cup_2120.json");
    let p = path.to_str().unwrap();
    let o = bin(&["build", "--form", "psi-cup", "--p", "2", "--q", "1", "--r", "2", "--s", "0", "--out", p]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["signature"]["p"], 2);
    assert_eq!(v["model"], "fock");
    assert_eq!(v["terms"][0]["wedge"], serde_json::json!(["xibar:1:1", "xibar:2:1"]));
    assert_eq!(v["terms"][0]["poly"].as_array().unwrap().len(), 2);
}

#[test]
fn builds_are_byte_identical() {
    let args = ["build", "--form", "km-nabla", "--p", "2", "--q", "1", "--r", "1", "--s", "1"];
    let a = bin(&args);
    let b = bin(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn export_converts_to_latex() {
    let path = tmp("psi_q_11.json");
    let p = path.to_str().unwrap();
    assert!(bin(&["build", "--form", "psi-q", "--p", "1", "--q", "1", "--out", p]).status.success());
    let o = bin(&["export", p, "--format", "latex"]);
    assert!(o.status.success());
    assert_eq!(String::from_utf8(o.stdout).unwrap().trim(), "\\left(X_{11}\\right) \\overline{\\xi}_{11}");
}

#[test]
fn verify_single_signature() {
    let o = bin(&["verify", "--suite", "closedness", "--p", "2", "--q", "1", "--r", "1"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v = stdout_json(&o);
    assert_eq!(v["passed"], true);
    let checks = v["suites"][0]["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["label"].as_str().unwrap().starts_with("unitary(p=2, q=1, r=1, s=0)")));
}

#[test]
fn seeded_runs_reproduce() {
    let args = ["verify", "--suite", "closedness", "--p", "1", "--q", "1", "--r", "1", "--seed", "7"];
    assert_eq!(bin(&args).stdout, bin(&args).stdout);
}

#[test]
fn theta_eisenstein_table() {
    let gram = tmp("e8.json");
    fs::write(&gram, theta_forms::theta::GramMatrix::e8().to_json()).unwrap();
    let o = bin(&["theta", "--gram", gram.to_str().unwrap(), "--nmax", "3", "--check", "eisenstein"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v = stdout_json(&o);
    assert_eq!(v["rep_numbers"], serde_json::json!([1, 240, 2160, 6720]));
    let rows = v["eisenstein"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert!(rows.iter().all(|r| r["theta"] == r["eisenstein"]));
}

#[test]
fn eisenstein_failure_exits_one_with_report() {
    let gram = tmp("a1.json");
    fs::write(&gram, r#"{"dim": 1, "gram": [["2"]]}"#).unwrap();
    let o = bin(&["theta", "--gram", gram.to_str().unwrap(), "--nmax", "2", "--check", "eisenstein"]);
    assert_eq!(o.status.code(), Some(1));
    let report: Value = serde_json::from_slice(&o.stderr).expect("stderr is json");
    assert_eq!(report["check"], "eisenstein");
}

#[test]
fn calibrate_reports_constants() {
    let o = bin(&["calibrate", "--p", "1", "--q", "1", "--r", "1"]);
    assert!(o.status.success());
    let v = stdout_json(&o);
    assert_eq!(v["c_plus"], "1i");
    assert_eq!(v["c_minus"], "1i");
    assert!(!v["brackets"].as_array().unwrap().is_empty());
}

#[test]
fn parse_errors_exit_two() {
    assert_eq!(bin(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(bin(&["build", "--form", "nope", "--p", "1", "--q", "1"]).status.code(), Some(2));
    assert_eq!(bin(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(bin(&["build", "--form", "psi-q", "--p", "1", "--q", "1", "--family", "x"]).status.code(), Some(2));
    let o = bin(&["build", "--form", "psi-orth", "--p", "1", "--q", "1", "--s", "1", "--family", "orthogonal"]);
    assert_eq!(o.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["error"], "usage");
}

#[test]
fn shape_errors_exit_one() {
    let o = bin(&["build", "--form", "km-nabla", "--p", "1", "--q", "1", "--r", "2", "--s", "1"]);
    assert_eq!(o.status.code(), Some(1));
}
