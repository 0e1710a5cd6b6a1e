//! End-to-end tests driving the compiled `voa` binary: report contents,
//! output determinism, error records, and exit codes.

use serde_json::Value;
use std::path::PathBuf;
use std::process::Command;

fn voa() -> Command {
    Command::new(env!("CARGO_BIN_EXE_voa"))
}

/// Run the binary, returning (exit code, stdout as UTF-8).
fn run(args: &[&str]) -> (i32, String) {
    let out = voa().args(args).output().expect("binary runs");
    (
        out.status.code().expect("no signal"),
        String::from_utf8(out.stdout).expect("stdout is UTF-8"),
    )
}

fn run_json(args: &[&str]) -> Value {
    let (code, stdout) = run(args);
    assert_eq!(code, 0, "expected success, got {code}: {stdout}");
    serde_json::from_str(&stdout).expect("stdout is JSON")
}

fn error_record(args: &[&str], expected_code: i32) -> Value {
    let (code, stdout) = run(args);
    assert_eq!(code, expected_code, "wrong exit code; stdout: {stdout}");
    let v: Value = serde_json::from_str(&stdout).expect("error record is JSON");
    assert!(v["error"]["kind"].is_string(), "missing error.kind: {v}");
    assert!(
        v["error"]["message"].is_string(),
        "missing error.message: {v}"
    );
    v
}

fn workspace_path(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .join(rel)
}

#[test]
fn classify_a2_full() {
    let v = run_json(&["lattice", "classify", "A2"]);
    assert_eq!(v["lattice"], "A2");
    assert_eq!(v["zhu_dim"], 19);
    assert_eq!(v["c2_dim"], 19);
    assert_eq!(v["c2_lower_bound"], 19);
    assert_eq!(v["small_vector_count"], 7);
    assert_eq!(v["verdict"], "NonAnomalous");
    assert_eq!(v["per_alpha"].as_array().unwrap().len(), 7);
    assert!(v.get("diagnostics").is_none());
}

#[test]
fn classify_e8_bound_only() {
    let v = run_json(&["lattice", "classify", "E8", "--effort", "bound_only"]);
    assert_eq!(v["zhu_dim"], 1);
    assert_eq!(v["c2_dim"], Value::Null);
    assert_eq!(v["small_vector_count"], Value::Null);
    assert_eq!(v["c2_lower_bound"], 1965);
    assert_eq!(v["verdict"], "Anomalous");
    assert_eq!(v["per_alpha"].as_array().unwrap().len(), 0);
}

#[test]
fn classify_glued_lattice_by_name_and_by_file() {
    let by_name = run(&["lattice", "classify", "D14A1_11", "--effort", "bound_only"]);
    let file = workspace_path("catalog/glued/D14A1_11.json");
    let by_file = run(&[
        "lattice",
        "classify",
        file.to_str().unwrap(),
        "--effort",
        "bound_only",
    ]);
    assert_eq!(by_name.0, 0);
    assert_eq!(
        by_name, by_file,
        "name and file routes must agree byte-for-byte"
    );

    let v: Value = serde_json::from_str(&by_name.1).unwrap();
    assert_eq!(v["zhu_dim"], 3137);
    assert_eq!(v["c2_lower_bound"], 6123);
    assert_eq!(v["verdict"], "Anomalous");

    // Determinism: an identical invocation yields identical bytes.
    let rerun = run(&["lattice", "classify", "D14A1_11", "--effort", "bound_only"]);
    assert_eq!(by_name, rerun);
}

#[test]
fn catalog_run_classifies_all_root_lattices() {
    let dir = workspace_path("catalog/roots");
    let v = run_json(&["catalog", "run", dir.to_str().unwrap()]);
    let reports = v.as_array().expect("array of reports");
    assert_eq!(reports.len(), 8);
    let verdicts: Vec<(String, String)> = reports
        .iter()
        .map(|r| {
            (
                r["lattice"].as_str().unwrap().to_string(),
                r["verdict"].as_str().unwrap().to_string(),
            )
        })
        .collect();
    let expected = [
        ("A1", "NonAnomalous"),
        ("A2", "NonAnomalous"),
        ("A3", "NonAnomalous"),
        ("A4", "NonAnomalous"),
        ("D4", "NonAnomalous"),
        ("E6", "NonAnomalous"),
        ("E7", "NonAnomalous"),
        ("E8", "Anomalous"),
    ];
    for ((name, verdict), (want_name, want_verdict)) in verdicts.iter().zip(expected) {
        assert_eq!(name, want_name);
        assert_eq!(verdict, want_verdict);
    }
    // Spot-check the two extremes of the table.
    assert_eq!(reports[0]["zhu_dim"], 5);
    assert_eq!(reports[0]["c2_dim"], 5);
    assert_eq!(reports[7]["zhu_dim"], 1);
    assert_eq!(reports[7]["c2_dim"], 4125);
}

#[test]
fn unknown_lattice_name_is_a_validation_error() {
    let v = error_record(&["lattice", "zhu", "NoSuchLattice"], 4);
    assert_eq!(v["error"]["kind"], "validation");
}

#[test]
fn malformed_lattice_file_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, "{\"name\": \"X\"").unwrap();
    let v = error_record(&["lattice", "zhu", path.to_str().unwrap()], 2);
    assert_eq!(v["error"]["kind"], "parse");
}

#[test]
fn degree_cap_is_a_resource_limit() {
    let v = error_record(&["lattice", "c2", "A2", "--max-degree", "2"], 3);
    assert_eq!(v["error"]["kind"], "resource_limit");
}

#[test]
fn non_coprime_minimal_model_is_rejected() {
    let v = error_record(&["minimal", "4", "6"], 4);
    assert_eq!(v["error"]["kind"], "validation");
}

#[test]
fn nonpositive_affine_level_is_rejected() {
    let v = error_record(&["affine", "zhu", "A1", "0"], 4);
    assert_eq!(v["error"]["kind"], "validation");
}

#[test]
fn minimal_model_arguments_are_order_free() {
    let a = run_json(&["minimal", "5", "2"]);
    assert_eq!(a["zhu_dim"], 2);
    assert_eq!(a["c2_dim"], 2);
    assert_eq!(a["verdict"], "NonAnomalous");
    let b = run_json(&["minimal", "2", "5"]);
    assert_eq!(b["zhu_dim"], 2);
}

#[test]
fn affine_c2_conjecture_matches_zhu() {
    let v = run_json(&["affine", "c2-conj", "3", "1"]);
    assert_eq!(v["algebra"], "A2");
    assert_eq!(v["level"], 1);
    assert_eq!(v["zhu_dim"], 19);
    assert_eq!(v["c2_conjecture"]["total"], 19);
    assert_eq!(v["c2_conjecture"]["matches_zhu"], true);
    assert_eq!(
        v["c2_conjecture"]["per_grade"],
        serde_json::json!([1, 8, 9, 1])
    );
}

#[test]
fn affine_zhu_handles_exceptional_algebras() {
    let v = run_json(&["affine", "zhu", "E8", "1"]);
    assert_eq!(v["algebra"], "E8");
    assert_eq!(v["zhu_dim"], 1);
    assert!(v.get("c2_conjecture").is_none());
}

#[test]
fn sl2_character_profile() {
    let v = run_json(&["affine", "sl2-char", "1", "4"]);
    assert_eq!(v["graded_dims"], serde_json::json!([1, 3, 4, 7, 13]));
    assert_eq!(v["c2_complete"], true);
    let grades = v["c2_per_grade"].as_array().unwrap();
    let dims: Vec<i64> = grades.iter().map(|g| g["dim"].as_i64().unwrap()).collect();
    assert_eq!(dims, [1, 3, 1, 0, 0]);
}

#[test]
fn pretty_renders_a_table() {
    let (code, stdout) = run(&["lattice", "classify", "A1", "--pretty"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("NonAnomalous"), "table shows the verdict");
    assert!(stdout.contains("zhu_dim"), "table labels the fields");
    assert!(
        serde_json::from_str::<Value>(&stdout).is_err(),
        "pretty output is a table, not JSON"
    );
}

#[test]
fn out_file_matches_stdout_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let (code, stdout) = run(&["lattice", "classify", "A1"]);
    assert_eq!(code, 0);
    let (code2, stdout2) = run(&["lattice", "classify", "A1", "--out", path.to_str().unwrap()]);
    assert_eq!(code2, 0);
    assert!(stdout2.is_empty(), "--out leaves stdout empty");
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, stdout);
}

#[test]
fn thread_flag_and_env_control_parallelism() {
    let v = run_json(&["--threads", "1", "lattice", "classify", "A2"]);
    assert_eq!(v["c2_dim"], 19);
    let out = voa()
        .args(["lattice", "classify", "A2"])
        .env("VOA_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v2: Value = serde_json::from_str(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(v2["c2_dim"], 19);
}
