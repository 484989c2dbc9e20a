//! End-to-end tests of the binary: output formats, exit codes, determinism,
//! and the config -> hv round trip.

use std::process::Command;

fn fatpoints(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_fatpoints"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &std::process::Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn hv_prints_h_and_dh() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("one.points");
    std::fs::write(&path, "0 0 1 2\n").unwrap();
    let out = fatpoints(&["hv", "--points", path.to_str().unwrap(), "--tmax", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("h: 1 3 3"));
    assert!(text.contains("dh: 1 2"));
}

#[test]
fn hv_parse_error_exits_2_with_line_number() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.points");
    std::fs::write(&path, "0 0 1 1\nnot points\n").unwrap();
    let out = fatpoints(&["hv", "--points", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn hv_duplicate_points_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dup.points");
    std::fs::write(&path, "1 1 1 1\n2 2 2 1\n").unwrap();
    let out = fatpoints(&["hv", "--points", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn predict_known_rows() {
    let out = fatpoints(&["predict", "--formula", "nine", "--case", "7", "--branch", "max"]);
    assert_eq!(stdout(&out).trim(), "1 2 3 4 5 6 4 2");
    let out = fatpoints(&["predict", "--formula", "uniform", "--n", "13", "--m", "2"]);
    assert_eq!(stdout(&out).trim(), "1 2 3 4 5 6 6 6 4 2");
    let out = fatpoints(&["predict", "--formula", "ci", "--t", "4"]);
    assert_eq!(stdout(&out).trim(), "1 2 3 4 5 6 6 5 3 1");
    let out = fatpoints(&[
        "predict", "--formula", "davis", "--dh", "1 2 2 2 1 1", "--t", "4",
    ]);
    let text = stdout(&out);
    assert!(text.contains("w1: 1 1 1 1 1 1"));
    assert!(text.contains("w2: 1 1 1"));
}

#[test]
fn predict_rejects_unknown_branch() {
    let out = fatpoints(&["predict", "--formula", "nine", "--case", "3", "--branch", "2"]);
    assert!(!out.status.success());
}

#[test]
fn config_roundtrips_through_hv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cfg.points");
    let out = fatpoints(&[
        "config",
        "--case",
        "nine.4.node-in",
        "--seed",
        "11",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let sidecar: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(path.with_extension("json")).unwrap())
            .unwrap();
    let expected: Vec<u64> = sidecar["expected"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    let hv = fatpoints(&["hv", "--points", path.to_str().unwrap(), "--json"]);
    assert!(hv.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&hv)).unwrap();
    let dh: Vec<u64> = report["dh"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    assert_eq!(dh, expected, "hv of the generated file must match the sidecar");
}

#[test]
fn config_is_deterministic_under_fixed_seed() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.points");
    let b = dir.path().join("b.points");
    for (path, _) in [(&a, 0), (&b, 1)] {
        let out = fatpoints(&[
            "config",
            "--case",
            "ci.3",
            "--seed",
            "123",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    assert_eq!(
        std::fs::read(&a).unwrap(),
        std::fs::read(&b).unwrap(),
        "same seed, same bytes"
    );
}

#[test]
fn seed_env_variable_is_honored() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.points");
    let b = dir.path().join("b.points");
    let out = Command::new(env!("CARGO_BIN_EXE_fatpoints"))
        .env("FATPOINTS_SEED", "77")
        .args(["config", "--case", "nine.1.collinear", "--out", a.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success());
    let out = fatpoints(&[
        "config",
        "--case",
        "nine.1.collinear",
        "--seed",
        "77",
        "--out",
        b.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn verify_json_reports_structured_cases() {
    let out = fatpoints(&["verify", "ci", "--seed", "5", "--tmax", "3", "--json"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let cases = report.as_array().unwrap();
    assert!(!cases.is_empty());
    for case in cases {
        assert!(case["case"].is_string());
        assert_eq!(case["status"], "PASS");
    }
}

#[test]
fn verify_rejects_unknown_suite() {
    let out = fatpoints(&["verify", "bogus"]);
    assert!(!out.status.success());
}

#[test]
fn curve_reports_membership_smoothness_and_torsion() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("nodal.points");
    std::fs::write(&path, "3 6 1 1\n-1 0 1 1\n0 0 1 1\n").unwrap();
    let out = fatpoints(&["curve", "--spec", "nodal", "--points", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("(3 : 6 : 1): smooth"));
    assert!(text.contains("(0 : 0 : 1): singular"));

    // The 2-torsion point of the nodal group sits at (-1 : 0 : 1).
    let torsion = dir.path().join("torsion.points");
    std::fs::write(&torsion, "-1 0 1 1\n").unwrap();
    let out = fatpoints(&["curve", "--spec", "nodal", "--points", torsion.to_str().unwrap()]);
    assert!(stdout(&out).contains("order 2"));

    let out = fatpoints(&["curve", "--spec", "bogus", "--points", path.to_str().unwrap()]);
    assert!(!out.status.success());
}
