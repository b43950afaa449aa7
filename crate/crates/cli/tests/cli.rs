use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn amodlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_amodlab")).args(args).output().expect("binary runs")
}

fn json_of(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = amodlab(&full);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn repo_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn validate(schema: &str, value: &Value) {
    let path = repo_root().join("schemas").join(format!("{schema}.schema.json"));
    let schema_value: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let compiled = jsonschema::JSONSchema::compile(&schema_value).expect("schema compiles");
    let messages: Vec<String> = match compiled.validate(value) {
        Ok(()) => Vec::new(),
        Err(errors) => errors.map(|e| format!("{} at {}", e, e.instance_path)).collect(),
    };
    assert!(messages.is_empty(), "{schema}: {messages:#?}");
}

#[test]
fn torsion_example() {
    let v = json_of(&["torsion", "--family", "higman:2:3", "--hmax", "8"]);
    assert_eq!(v["orders"], serde_json::json!([1, 2, 3]));
}

#[test]
fn witness_example() {
    let out = amodlab(&["--format", "text", "witness", "3", "1", "--homology"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("betti: [0,0,1]"));
    let v = json_of(&["witness", "3", "1"]);
    assert_eq!(v["homology"]["betti"], serde_json::json!([0, 0, 1]));
}

#[test]
fn bounds_example() {
    let v = json_of(&["bounds", "--p", "4", "--q", "6", "--r", "1"]);
    assert_eq!(v["connectivity_bound"], 0);
}

#[test]
fn every_command_matches_its_schema() {
    let dir = tempfile::tempdir().unwrap();
    let complex = dir.path().join("square.txt");
    std::fs::write(&complex, "0 1\n1 2\n2 3\n0 3\n").unwrap();
    let cases: Vec<(&str, Vec<&str>)> = vec![
        ("torsion", vec!["torsion", "--family", "higman:2:3", "--hmax", "6"]),
        ("torsion", vec!["torsion", "--family", "higman:3:2"]),
        ("torsion", vec!["torsion", "--family", "star:6"]),
        ("distinguish", vec!["distinguish", "higman:2:3", "higman:2:4"]),
        ("distinguish", vec!["distinguish", "star:4", "star:4"]),
        ("lcm-claim", vec!["lcm-claim", "4", "6", "50"]),
        ("bounds", vec!["bounds", "--p", "7", "--q", "9", "--r", "2"]),
        ("fdomain", vec!["fdomain", "6", "2"]),
        ("fdomain", vec!["fdomain", "8", "1", "--cap", "3"]),
        ("witness", vec!["witness", "4", "2"]),
        ("retract", vec!["retract", "--family", "higman:2:3", "--sigma", ",0,1", "--source", ""]),
        ("retract", vec!["retract", "--family", "star:3", "--sigma", ",0,1,00", "--source", "00", "--source", "1"]),
        ("census", vec!["census", "--family", "lamplighter", "--height", "4"]),
        ("dlink-params", vec!["dlink-params", "--family", "higman:2:3", "--k", "4"]),
        ("check-presentation", vec!["check-presentation", "brh2", "--nmax", "5"]),
        ("homology", vec!["homology", complex.to_str().unwrap()]),
        ("reproduce", vec!["reproduce", "--filter", "torsion"]),
    ];
    for (schema, args) in cases {
        validate(schema, &json_of(&args));
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["--format", "json", "reproduce", "--no-timings", "--filter", "morse", "--seed", "7"],
        vec!["--format", "json", "retract", "--family", "higman:2:4", "--sigma", ",0,1,2", "--source", ""],
        vec!["--format", "text", "fdomain", "9", "1"],
    ] {
        let first = amodlab(&args);
        let second = amodlab(&args);
        assert_eq!(first.stdout, second.stdout, "{args:?}");
        assert!(!first.stdout.is_empty());
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["torsion", "--family", "bogus"],
        vec!["bounds", "--p", "1", "--q", "3", "--r", "1"],
        vec!["no-such-command"],
        vec!["torsion", "--family", "higman:2:3", "--hmax", "0"],
        vec!["lcm-claim", "10", "20", "5"],
        vec!["reproduce", "--filter", "nothing-matches-this"],
        vec!["homology", "/nonexistent/complex.txt"],
    ] {
        let out = amodlab(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    let out = amodlab(&["bounds", "--p", "1", "--q", "3", "--r", "1"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("--p"));
}

#[test]
fn filter_selects_torsion_criteria() {
    let v = json_of(&["reproduce", "--filter", "torsion"]);
    let ids: Vec<u64> = v["criteria"].as_array().unwrap().iter().map(|c| c["id"].as_u64().unwrap()).collect();
    assert_eq!(ids, vec![1, 2, 3]);
    assert_eq!(v["failed"], 0);
}

#[test]
fn corrupted_golden_fails_its_criterion() {
    let golden = repo_root().join("crates/cli/golden/acceptance.json");
    let mut value: Value = serde_json::from_str(&std::fs::read_to_string(golden).unwrap()).unwrap();
    value["census"]["counts"] = serde_json::json!([1, 3, 10]);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("golden.json");
    std::fs::write(&path, serde_json::to_string(&value).unwrap()).unwrap();

    let out = amodlab(&["--format", "json", "reproduce", "--golden", path.to_str().unwrap(), "--filter", "census"]);
    assert_eq!(out.status.code(), Some(1));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["criteria"][0]["passed"], false);

    let out = amodlab(&["--format", "json", "reproduce", "--golden", path.to_str().unwrap(), "--filter", "flagness"]);
    assert_eq!(out.status.code(), Some(0));

    std::fs::write(&path, "{ not json").unwrap();
    let out = amodlab(&["--format", "json", "reproduce", "--golden", path.to_str().unwrap(), "--filter", "spectra"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn export_writes_a_loadable_complex() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("interval.txt");
    json_of(&["retract", "--family", "higman:2:3", "--sigma", ",0,1,2", "--source", "", "--export", path.to_str().unwrap()]);
    let v = json_of(&["homology", path.to_str().unwrap()]);
    assert!(v["betti"].as_array().unwrap().iter().all(|b| b == 0));
}

#[test]
fn thread_count_does_not_change_output() {
    let args = ["--format", "json", "reproduce", "--no-timings", "--filter", "torsion"];
    let single = Command::new(env!("CARGO_BIN_EXE_amodlab")).args(args).env("AMODLAB_THREADS", "1").output().unwrap();
    let many = Command::new(env!("CARGO_BIN_EXE_amodlab")).args(args).env("AMODLAB_THREADS", "4").output().unwrap();
    assert_eq!(single.stdout, many.stdout);
}
