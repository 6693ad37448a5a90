//! End-to-end checks of the command-line interface: determinism, exit
//! codes, and the vertices → check round trip.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn spuntrop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spuntrop"))
        .args(args)
        .output()
        .expect("spawning the binary")
}

fn whl() -> String {
    fixture_path("whl.json").display().to_string()
}

fn nz() -> String {
    fixture_path("whl_nz.json").display().to_string()
}

#[test]
fn validate_reports_the_combinatorics() {
    let out = spuntrop(&["validate", &whl()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("tetrahedra: 4"));
    assert!(text.contains("edge classes: 4"));
    assert!(text.contains("symmetry group order: 8"));
    assert!(text.contains("valid: true"));
}

#[test]
fn unpaired_face_exits_with_validation_code() {
    let doc = r#"{"num_tetrahedra": 1, "gluings": [[null, null, null, null]]}"#;
    let path = std::env::temp_dir().join("spuntrop_unpaired.json");
    std::fs::write(&path, doc).unwrap();
    let out = spuntrop(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("unpaired"), "stderr was: {err}");
}

#[test]
fn missing_file_exits_with_io_code() {
    let out = spuntrop(&["validate", "/nonexistent/whl.json"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn identical_runs_are_byte_identical() {
    for args in [
        vec!["vertices", "--format", "csv", "--nz"],
        vec!["equations", "--format", "json"],
        vec!["prevariety", "--format", "json"],
    ] {
        let mut full: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        if full[0] == "vertices" {
            full.push(nz());
        }
        full.push(whl());
        let strs: Vec<&str> = full.iter().map(|s| s.as_str()).collect();
        let a = spuntrop(&strs);
        let b = spuntrop(&strs);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "nondeterministic output for {args:?}");
    }
}

#[test]
fn vertices_json_round_trips_through_check() {
    let out = spuntrop(&["vertices", "--format", "json", &whl()]);
    assert!(out.status.success());
    let path = std::env::temp_dir().join("spuntrop_vertices_roundtrip.json");
    std::fs::write(&path, &out.stdout).unwrap();
    let check = spuntrop(&["check", "--vertices", path.to_str().unwrap(), &whl()]);
    assert!(check.status.success());
    let text = String::from_utf8(check.stdout).unwrap();
    assert!(text.contains("checked 20 vertices"));
}

#[test]
fn csv_has_the_table_columns() {
    let out = spuntrop(&["vertices", "--format", "csv", "--nz", &nz(), &whl()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let header = text.lines().next().unwrap();
    assert_eq!(
        header,
        "vertex,q0,q0',q0'',q1,q1',q1'',q2,q2',q2'',q3,q3',q3'',nu_Lt0,neg_nu_M0,nu_Lt1,neg_nu_M1"
    );
    assert_eq!(text.lines().count(), 21);
}

#[test]
fn infeasible_certificate_exits_with_computation_code() {
    let ids: Vec<String> = (1..=20).map(|i| i.to_string()).collect();
    let list = ids.join(",");
    let out = spuntrop(&["certify", "--surfaces", &list, &whl()]);
    assert_eq!(out.status.code(), Some(3));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\"feasible\": false"));
    assert!(text.contains("ineq_multipliers"));
}

#[test]
fn feasible_certificate_reports_alpha() {
    // the published alpha+ family, in canonical vertex ids
    let out = spuntrop(&[
        "certify",
        "--surfaces",
        "18,19,2,4,13,12,14",
        "--format",
        "table",
        &whl(),
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("feasible: true"));
    assert!(text.contains("alpha (units of pi): 0 0 1 1 0 0 0 0 1 1 0 0"));
}

#[test]
fn probe_rejects_wrong_component_count() {
    let out = spuntrop(&["probe", "--path", "w,w", &whl()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn probe_flags_nondivergent_paths() {
    let out = spuntrop(&["probe", "--path", "i,i,i,i", &whl()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("diverging: false"));
}

#[test]
fn correspond_verifies_on_the_whitehead_fixture() {
    let out = spuntrop(&["correspond", &whl()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.ends_with("correspondence verified\n"));
}

#[test]
fn slopes_prints_the_functionals() {
    let out = spuntrop(&["slopes", "--nz", &nz(), &whl()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    // the raw contraction representative; it matches the published
    // functional modulo the Q-matching row space
    assert!(
        text.contains("neg_nu_M0: 0 1 -1 -1 1 0 0 0 0 1 0 -1"),
        "got: {text}"
    );
    assert!(text.contains("M0: 1 0 1 0 0 0 0 -1 -1 0 0 -1 (sign 0)"));
}
