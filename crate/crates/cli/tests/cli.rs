//! End-to-end checks of the binary: JSON in, JSON/CSV out, exit codes.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_orlicz"))
}

fn write_tmp(dir: &std::path::Path, name: &str, content: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, content).unwrap();
    path
}

fn tmpdir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("orlicz-cli-{tag}-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn run_ok(cmd: &mut Command) -> Output {
    let out = cmd.output().expect("binary runs");
    assert!(
        out.status.success(),
        "stdout: {}\nstderr: {}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
    out
}

#[test]
fn indices_of_power_log() {
    let dir = tmpdir("indices");
    let phi = write_tmp(&dir, "phi.json", r#"{"family":"power_log","p":2.0,"q":1.0}"#);
    let out = run_ok(bin().args(["indices", "--phi", phi.to_str().unwrap()]));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let alpha = v["alpha"].as_f64().unwrap();
    let beta = v["beta"].as_f64().unwrap();
    assert!((alpha - 2.0).abs() < 0.05, "alpha = {alpha}");
    assert!((beta - 3.0).abs() < 0.05, "beta = {beta}");
    assert_eq!(v["reflexive"], serde_json::Value::Bool(true));
}

#[test]
fn widom_check_on_shift_pair() {
    let dir = tmpdir("widom");
    let a = write_tmp(&dir, "a.json", r#"{"kind":"trigpoly","coeffs":[[1,1.0,0.0]]}"#);
    let b = write_tmp(&dir, "b.json", r#"{"kind":"trigpoly","coeffs":[[-1,1.0,0.0]]}"#);
    let out = run_ok(bin().args([
        "widom-check",
        "--a",
        a.to_str().unwrap(),
        "--b",
        b.to_str().unwrap(),
        "--window",
        "8",
    ]));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["residual"].as_f64().unwrap() <= 1e-13);
    assert_eq!(v["pass"], serde_json::Value::Bool(true));
}

#[test]
fn norm_of_empty_sequence_is_zero() {
    let dir = tmpdir("norm");
    let phi = write_tmp(&dir, "phi.json", r#"{"family":"power","p":2.0}"#);
    let seq = write_tmp(&dir, "seq.json", "[]");
    let out = run_ok(bin().args([
        "norm",
        "--phi",
        phi.to_str().unwrap(),
        "--seq",
        seq.to_str().unwrap(),
    ]));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["norm"].as_f64().unwrap(), 0.0);
}

#[test]
fn norm_matches_euclidean_for_square_generator() {
    let dir = tmpdir("norm2");
    let phi = write_tmp(&dir, "phi.json", r#"{"family":"power","p":2.0}"#);
    let seq = write_tmp(&dir, "seq.json", "[[0,3.0,0.0],[5,0.0,4.0]]");
    let out = run_ok(bin().args([
        "norm",
        "--phi",
        phi.to_str().unwrap(),
        "--seq",
        seq.to_str().unwrap(),
    ]));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!((v["norm"].as_f64().unwrap() - 5.0).abs() < 1e-10);
}

#[test]
fn operator_emits_csv_matrix() {
    let dir = tmpdir("operator");
    let sym = write_tmp(&dir, "a.json", r#"{"kind":"trigpoly","coeffs":[[1,1.0,0.0]]}"#);
    let out_path = dir.join("matrix.csv");
    run_ok(bin().args([
        "operator",
        "--symbol",
        sym.to_str().unwrap(),
        "--role",
        "toeplitz",
        "--n",
        "3",
        "--emit",
        out_path.to_str().unwrap(),
    ]));
    let csv = fs::read_to_string(&out_path).unwrap();
    let rows: Vec<&str> = csv.lines().collect();
    assert_eq!(rows.len(), 3);
    // subdiagonal ones: row 1 starts with re(a_{10}) = 1
    let row1: Vec<f64> = rows[1].split(',').map(|x| x.parse().unwrap()).collect();
    assert_eq!(row1.len(), 6);
    assert!((row1[0] - 1.0).abs() < 1e-15);
    assert!(row1[1].abs() < 1e-15);
}

#[test]
fn schema_violation_exits_64() {
    let dir = tmpdir("schema");
    let bad = write_tmp(&dir, "phi.json", r#"{"family":"power"}"#);
    let out = bin()
        .args(["indices", "--phi", bad.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(64));
    let missing = dir.join("missing.json");
    let out = bin()
        .args(["indices", "--phi", missing.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn outputs_are_deterministic() {
    let dir = tmpdir("determinism");
    let phi = write_tmp(&dir, "phi.json", r#"{"family":"power_log","p":2.0,"q":1.0}"#);
    let out1 = run_ok(bin().args(["indices", "--phi", phi.to_str().unwrap(), "--seed", "7"]));
    let out2 = run_ok(bin().args(["indices", "--phi", phi.to_str().unwrap(), "--seed", "7"]));
    assert_eq!(out1.stdout, out2.stdout);
}

#[test]
fn localise_shift_assignment_exits_by_verdict() {
    let dir = tmpdir("localise");
    let phi = write_tmp(&dir, "phi.json", r#"{"family":"power_log","p":2.0,"q":1.0}"#);
    let sym = write_tmp(&dir, "a.json", r#"{"kind":"trigpoly","coeffs":[[1,1.0,0.0]]}"#);
    // shift representatives at eight points
    let mut points = Vec::new();
    for j in 0..8 {
        let tau = -std::f64::consts::PI + 2.0 * std::f64::consts::PI * j as f64 / 8.0;
        points.push(format!(
            r#"{{"tau":{tau},"rep":{{"kind":"trigpoly","coeffs":[[1,1.0,0.0]]}}}}"#
        ));
    }
    let assign = write_tmp(&dir, "assign.json", &format!("[{}]", points.join(",")));
    let report_path = dir.join("report.json");
    let out = bin()
        .args([
            "localise",
            "--phi",
            phi.to_str().unwrap(),
            "--symbol",
            sym.to_str().unwrap(),
            "--assignment",
            assign.to_str().unwrap(),
            "--out",
            report_path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&report_path).unwrap()).unwrap();
    assert_eq!(report["verdict"], "fredholm");
    assert_eq!(report["rows"].as_array().unwrap().len(), 8);
}
