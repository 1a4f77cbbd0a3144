use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::Value;

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn moldkit(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_moldkit")).args(args).output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let json = serde_json::from_str(&text).unwrap_or(Value::Null);
    (out.status.code().unwrap(), json)
}

#[test]
fn closure_and_borel_detection() {
    let (code, v) = moldkit(&["closure", &fixture("running.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["rank"], 3);
    let (code, v) = moldkit(&["is-borel", &fixture("running.json")]);
    assert_eq!((code, v["borel"].as_bool()), (0, Some(true)));
    let (code, v) = moldkit(&["is-borel", &fixture("diagonal.json")]);
    assert_eq!((code, v["borel"].as_bool(), v["rank"].as_u64()), (0, Some(false), Some(2)));
}

#[test]
fn discriminant_of_the_running_pair_vanishes() {
    let (code, v) = moldkit(&["discriminant", &fixture("running.json"), "--pair"]);
    assert_eq!(code, 0);
    assert_eq!(v["discriminant"], "0");
    let (code, v) = moldkit(&["discriminant", &fixture("running.json"), "--quad"]);
    assert_eq!((code, &v["error"]["code"]), (2, &Value::from("input")));
}

#[test]
fn triangularize_flag_and_characters() {
    let (code, v) = moldkit(&["triangularize", &fixture("running_conjugate.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["generators"].as_array().unwrap().len(), 2);
    let (code, v) = moldkit(&["flag", &fixture("running.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["flag"], serde_json::json!([[["1", "0"]]]));
    let (_, a) = moldkit(&["characters", &fixture("running.json")]);
    let (_, b) = moldkit(&["characters", &fixture("running_conjugate.json")]);
    assert_eq!(a, b);
    assert_eq!(a["characters"], serde_json::json!([["1", "2"], ["1", "1"]]));
    let (code, v) = moldkit(&["flag", &fixture("diagonal.json")]);
    assert_eq!((code, &v["error"]["code"]), (1, &Value::from("not_borel")));
}

#[test]
fn canonical_output_is_conjugation_invariant() {
    let a = Command::new(env!("CARGO_BIN_EXE_moldkit")).args(["canonical", &fixture("running.json")]).output().unwrap();
    let b = Command::new(env!("CARGO_BIN_EXE_moldkit"))
        .args(["canonical", &fixture("running_conjugate.json")])
        .output()
        .unwrap();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["n"], 2);
    assert_eq!(v["words"], serde_json::json!({"1,1": [], "2,2": [2], "1,2": [1]}));
}

#[test]
fn equivalence_queries() {
    let (code, v) = moldkit(&["equiv", &fixture("running.json"), &fixture("running_conjugate.json")]);
    assert_eq!((code, v["equivalent"].as_bool()), (0, Some(true)));
    let (code, v) = moldkit(&["equiv", &fixture("running.json"), &fixture("running_beta3.json")]);
    assert_eq!((code, v["equivalent"].as_bool()), (0, Some(false)));
}

#[test]
fn census_and_prediction() {
    let (code, v) = moldkit(&["enum-molds", "--n", "2", "--d", "3", "--q", "2", "--reps", "--jobs", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["total"], 3);
    assert_eq!(v["byType"]["1,1"], 3);
    assert_eq!(v["representatives"].as_array().unwrap().len(), 3);
    let (code, v) = moldkit(&["predict", "--n", "2", "--d", "2", "--q", "3"]);
    assert_eq!((code, &v["predicted"]), (0, &Value::from(13)));
    let (code, v) = moldkit(&["enum-molds", "--n", "3", "--d", "5", "--q", "3"]);
    assert_eq!((code, &v["error"]["code"]), (3, &Value::from("resource_limit")));
}

#[test]
fn input_errors_exit_with_code_two() {
    let (code, v) = moldkit(&["closure", &fixture("bad_prime.json")]);
    assert_eq!((code, &v["error"]["code"]), (2, &Value::from("not_prime")));
    let (code, _) = moldkit(&["closure", &fixture("missing.json")]);
    assert_eq!(code, 2);
    let (code, _) = moldkit(&["closure"]);
    assert_eq!(code, 2);
    let out = Command::new(env!("CARGO_BIN_EXE_moldkit")).arg("--help").output().unwrap();
    assert!(out.status.success());
}

#[test]
fn reads_standard_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_moldkit"))
        .args(["closure", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    let doc = std::fs::read(fixture("running.json")).unwrap();
    child.stdin.take().unwrap().write_all(&doc).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["rank"], 3);
}

#[test]
fn selftest_is_reproducible() {
    let (code, a) = moldkit(&["selftest", "--seed", "11", "--count", "5"]);
    let (_, b) = moldkit(&["selftest", "--seed", "11", "--count", "5"]);
    assert_eq!(code, 0);
    assert_eq!(a, b);
    assert_eq!(a["failures"], serde_json::json!([]));
}
