use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

struct Files {
    dir: TempDir,
}

impl Files {
    fn new() -> Self {
        Files { dir: tempfile::tempdir().unwrap() }
    }

    fn write(&self, name: &str, body: &str) -> PathBuf {
        let path = self.dir.path().join(name);
        std::fs::write(&path, body).unwrap();
        path
    }
}

fn srvan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_srvan"))
        .args(args)
        .env_remove("SRVAN_WORKERS")
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_reports_violating_faces() {
    let f = Files::new();
    let tri = f.write("tri.txt", "3\n1 2 3\n");
    let v3 = f.write("v3.txt", "3\n3\n");
    let out = srvan(&["check", path(&tri), path(&v3), "--n", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let j = json(&out);
    assert_eq!(j["holds"], false);
    let faces: Vec<&Value> = j["violations"].as_array().unwrap().iter().map(|v| &v["face"]).collect();
    assert!(faces.contains(&&serde_json::json!([1, 2])));
    let v12 = j["violations"].as_array().unwrap().iter().find(|v| v["face"] == serde_json::json!([1, 2]));
    assert_eq!(v12.unwrap()["sigma_vertices"], 0);
}

#[test]
fn check_passes_for_an_edge() {
    let f = Files::new();
    let tri = f.write("tri.txt", "3\n1 2 3\n");
    let e12 = f.write("e12.json", r#"{"vertices": 3, "facets": [[1, 2]]}"#);
    let out = srvan(&["check", path(&tri), path(&e12), "--n", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["violations"], serde_json::json!([]));
}

#[test]
fn input_errors_exit_two() {
    let f = Files::new();
    let bad = f.write("bad.txt", "3\n1 2\n2 9\n");
    let tri = f.write("tri.txt", "3\n1 2 3\n");
    let out = srvan(&["check", path(&bad), path(&tri), "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
    let missing = f.dir.path().join("missing.txt");
    assert_eq!(srvan(&["check", path(&missing), path(&tri), "--n", "1"]).status.code(), Some(2));
    // sigma not inside delta
    let e12 = f.write("e12.txt", "3\n1 2\n");
    assert_eq!(srvan(&["check", path(&e12), path(&tri), "--n", "1"]).status.code(), Some(2));
    assert_eq!(
        srvan(&["cohomology", path(&tri), path(&e12), "--index", "1", "--field", "F4"]).status.code(),
        Some(2)
    );
    assert_eq!(
        srvan(&["cohomology", path(&tri), path(&e12), "--index", "9"]).status.code(),
        Some(2)
    );
    assert_eq!(srvan(&["audit", "--vertices", "5..4"]).status.code(), Some(2));
    assert_eq!(srvan(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn cohomology_witness_in_the_triangle() {
    let f = Files::new();
    let tri = f.write("tri.txt", "3\n1 2 3\n");
    let v3 = f.write("v3.txt", "3\n3\n");
    for field in ["Q", "F2", "F3", "Fp:5"] {
        let out = srvan(&["cohomology", path(&tri), path(&v3), "--index", "2", "--field", field]);
        assert_eq!(out.status.code(), Some(1), "{field}");
        let j = json(&out);
        assert_eq!(j["vanishes"], false);
        assert_eq!(j["witness"]["f_plus"], serde_json::json!([]));
        assert_eq!(j["witness"]["f_minus"], serde_json::json!([1, 2]));
        let piece = j["pieces"]
            .as_array()
            .unwrap()
            .iter()
            .find(|p| p["f_plus"] == serde_json::json!([]) && p["f_minus"] == serde_json::json!([1, 2]))
            .unwrap();
        assert_eq!(piece["dim"], 1);
    }
}

#[test]
fn cohomology_vanishes_for_the_whole_complex() {
    let f = Files::new();
    let tri = f.write("tri.txt", "3\n1 2 3\n");
    let out = srvan(&["cohomology", path(&tri), path(&tri), "--index", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["vanishes"], true);
}

#[test]
fn audit_exit_code_tracks_disagreements() {
    let out = srvan(&["audit", "--seed", "42", "--vertices", "4..4", "--count", "100", "--fields", "Q,F2"]);
    let j = json(&out);
    assert_eq!(j["instances"], 100);
    let disagree = !j["disagreements"].as_array().unwrap().is_empty();
    assert_eq!(out.status.code(), Some(if disagree { 1 } else { 0 }));
    // every disagreement carries the full instance for reproduction
    for d in j["disagreements"].as_array().unwrap() {
        assert!(d["delta"]["facets"].is_array() && d["sigma"]["facets"].is_array());
    }
}

#[test]
fn empty_audit_succeeds() {
    let out = srvan(&["audit", "--seed", "1", "--count", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let j = json(&out);
    assert_eq!(j["instances"], 0);
    assert_eq!(j["comparisons"], 0);
}

#[test]
fn audit_on_whole_complexes_agrees() {
    let out = srvan(&["audit", "--seed", "5", "--vertices", "3..5", "--count", "20", "--strategy", "full_skeleton"]);
    let j = json(&out);
    // the top skeleton is Δ itself; those instances never disagree
    for d in j["disagreements"].as_array().unwrap() {
        assert_ne!(d["delta"], d["sigma"]);
    }
}

#[test]
fn audit_is_byte_deterministic_across_workers() {
    let f = Files::new();
    let args = ["audit", "--seed", "7", "--vertices", "4..5", "--count", "25"];
    let a = srvan(&args).stdout;
    let b = Command::new(env!("CARGO_BIN_EXE_srvan")).args(args).env("SRVAN_WORKERS", "2").output().unwrap().stdout;
    assert_eq!(a, b);
    let report = f.dir.path().join("report.json");
    let mut with_output = args.to_vec();
    with_output.extend(["--output", path(&report)]);
    srvan(&with_output);
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(written, serde_json::from_slice::<Value>(&a).unwrap());
}

#[test]
fn subdivide_triangle() {
    let f = Files::new();
    let tri = f.write("tri.txt", "3\n1 2 3\n");
    let j = json(&srvan(&["subdivide", path(&tri)]));
    assert_eq!(j["complex"]["vertices"], 7);
    assert_eq!(j["complex"]["facets"].as_array().unwrap().len(), 6);
    assert_eq!(j["barycenters"][6], serde_json::json!([1, 2, 3]));
    let v3 = f.write("v3.txt", "3\n3\n");
    let j = json(&srvan(&["subdivide", path(&tri), "--sigma", path(&v3)]));
    assert_eq!(j["complex"]["vertices"], 6);
    let text = srvan(&["--format", "text", "subdivide", path(&tri)]);
    assert!(String::from_utf8_lossy(&text.stdout).starts_with("7\n"));
}

#[test]
fn collapse_relative_subdivision() {
    let f = Files::new();
    let tri = f.write("tri.txt", "3\n1 2 3\n");
    let e12 = f.write("e12.txt", "3\n1 2\n");
    let out = srvan(&["collapse", path(&tri), "--sigma", path(&e12), "--targets", "2,1"]);
    assert_eq!(out.status.code(), Some(0));
    let j = json(&out);
    assert_eq!(j["stuck"], false);
    assert_eq!(j["remaining_targets"], serde_json::json!([]));
    assert!(!j["removed_pairs"].as_array().unwrap().is_empty());

    let circle = f.write("circle.txt", "3\n1 2\n2 3\n1 3\n");
    let out = srvan(&["collapse", path(&circle), "--targets", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["stuck"], true);
}

#[test]
fn text_format() {
    let f = Files::new();
    let tri = f.write("tri.txt", "# full triangle\n3\n1 2 3\n");
    let v3 = f.write("v3.txt", "3\n3\n");
    let out = srvan(&["--format", "text", "check", path(&tri), path(&v3), "--n", "2"]);
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.contains("criterion fails"));
    assert!(s.contains("{1,2}"));
}
