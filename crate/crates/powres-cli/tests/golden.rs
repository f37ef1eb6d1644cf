//! End-to-end CLI tests: byte-exact output comparison against checked-in
//! golden files, plus exit-code behavior.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_powres"));
    // keep golden outputs independent of the caller's environment
    c.env_remove("POWRES_FIELD");
    c
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name]
        .iter()
        .collect();
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("missing golden {name}: {e}"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn assert_golden(args: &[&str], name: &str) {
    let out = run(args);
    let stdout = String::from_utf8(out.stdout).expect("utf8 output");
    assert!(
        out.status.success(),
        "{args:?} exited {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(stdout, golden(name), "stdout differs from golden {name}");
}

#[test]
fn bound_tables_match_goldens() {
    assert_golden(&["bounds", "-r", "3", "-q", "2"], "bounds_r3_q2.md");
    assert_golden(&["bounds", "-r", "3", "-q", "3"], "bounds_r3_q3.md");
    assert_golden(&["bounds", "-r", "4", "-q", "3"], "bounds_r4_q3.md");
    assert_golden(
        &["bounds", "-r", "3", "-q", "3", "--format", "csv"],
        "bounds_r3_q3.csv",
    );
    assert_golden(
        &["bounds", "-r", "3", "-q", "3", "--format", "json"],
        "bounds_r3_q3.json",
    );
}

#[test]
fn ideal_tables_match_goldens() {
    assert_golden(
        &["table", "--corpus", "four-cycle", "-r", "2", "--betti"],
        "table_four_cycle_r2.md",
    );
    assert_golden(
        &["table", "--corpus", "four-cycle", "-r", "3"],
        "table_four_cycle_r3.md",
    );
}

#[test]
fn betti_outputs_match_goldens() {
    assert_golden(
        &["betti", "--corpus", "four-cycle", "-r", "2"],
        "betti_four_cycle_r2.txt",
    );
    assert_golden(
        &["betti", "--corpus", "path4", "-r", "1", "--format", "json"],
        "betti_path4_r1.json",
    );
}

#[test]
fn complex_builders_match_goldens() {
    assert_golden(&["build-lrq", "-r", "3", "-q", "2"], "lrq_r3_q2.json");
    assert_golden(
        &["build-lri", "--corpus", "four-cycle", "-r", "2"],
        "lri_four_cycle_r2.json",
    );
}

#[test]
fn verify_reports_match_goldens() {
    assert_golden(&["verify", "--corpus", "path4", "-r", "2"], "verify_path4_r2.txt");
}

#[test]
fn both_betti_routes_agree_via_cli() {
    let out = run(&["betti", "--corpus", "four-cycle", "-r", "2", "--route", "both"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, golden("betti_four_cycle_r2.txt"));
}

#[test]
fn maximality_check_passes_for_corpus_ideal() {
    let out = run(&["verify-maximality", "--corpus", "path4", "-r", "2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("verdict: the extremal ideal dominates degree by degree"));
}

#[test]
fn field_env_variable_sets_the_default_field() {
    let out = bin()
        .env("POWRES_FIELD", "7")
        .args(["betti", "--corpus", "path4", "-r", "1"])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("field GF(7)"), "got: {text}");
}

#[test]
fn bad_inputs_exit_2() {
    // non-minimal generating set
    let out = run(&[
        "verify",
        "--ideal-json",
        r#"{"generators": [["x"], ["x","y"]]}"#,
        "-r",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("input error:"));
    // zero power
    let out = run(&["bounds", "-r", "0", "-q", "2"]);
    assert_eq!(out.status.code(), Some(2));
    // unknown corpus name
    let out = run(&["build-lri", "--corpus", "nonsense", "-r", "1"]);
    assert_eq!(out.status.code(), Some(2));
    // non-square-free generators
    let out = run(&[
        "build-lri",
        "--ideal-json",
        r#"{"generators": [{"x": 2}, {"y": 1}]}"#,
        "-r",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    // the precondition applies to every ideal-taking subcommand, not only the builders
    let out = run(&[
        "betti",
        "--ideal-json",
        r#"{"generators": [{"x": 2}, {"y": 1}]}"#,
        "-r",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("input error:"));
    let out = run(&[
        "betti",
        "--ideal-json",
        r#"{"generators": [["x"], ["x","y"]]}"#,
        "-r",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oversized_requests_exit_3() {
    // the minimization route enumerates every face up front, so a tiny face
    // budget is exceeded before any ranks are computed
    let out = run(&[
        "betti",
        "--corpus",
        "four-cycle",
        "-r",
        "2",
        "--route",
        "minimize",
        "--max-faces",
        "4",
    ]);
    assert_eq!(
        out.status.code(),
        Some(3),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("infeasible:"));
}

#[test]
fn ideal_file_input_works() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ideal.json");
    std::fs::write(
        &path,
        r#"{"vars": ["x1", "x2", "x3", "x4"], "generators": [["x1","x2"], ["x2","x3"], ["x3","x4"]]}"#,
    )
    .unwrap();
    let out = run(&["betti", "--ideal-file", path.to_str().unwrap(), "-r", "1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, golden("betti_path4_r1.txt"));
}
