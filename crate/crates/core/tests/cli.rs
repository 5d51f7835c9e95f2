//! The command-line front end driven through `hermhull::cli::run`.

use std::path::PathBuf;

use hermhull::cli::run;
use serde_json::Value;

fn exec(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hermhull").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out, err) = exec(args);
    let v = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}{err}"));
    (code, v)
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hermhull-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn schema() -> jsonschema::Validator {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../schema/report.schema.json");
    let s: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&s).unwrap()
}

#[test]
fn construct_report_validates_against_schema() {
    let v = schema();
    for args in [
        &["grs", "construct", "--family", "CON1", "--q", "4"][..],
        &["grs", "construct", "--family", "CON4", "--q", "5", "--k", "2", "--m", "3"],
        &["grs", "construct", "--family", "CON2E", "--q", "5", "--k", "6", "--z", "1", "--f", "1"],
        &["ag", "build", "--family", "COR2", "--q", "4", "--t", "2", "--k", "1"],
    ] {
        let (code, doc) = json(args);
        assert_eq!(code, 0, "{args:?}");
        let errors: Vec<String> = v.iter_errors(&doc).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
    }
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = ["verify-all", "--q", "4"];
    let (c1, a, _) = exec(&args);
    let (c2, b, _) = exec(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
    let (_, t1, _) = exec(&["quantum", "tables", "--q", "5", "--format", "csv"]);
    let (_, t2, _) = exec(&["quantum", "tables", "--q", "5", "--format", "csv"]);
    assert_eq!(t1, t2);
}

#[test]
fn exit_codes() {
    assert_eq!(exec(&["--bogus"]).0, 2);
    assert_eq!(exec(&["grs", "construct", "--family", "CON2", "--q", "5", "--k", "9"]).0, 2);
    assert_eq!(exec(&["field", "--q", "6"]).0, 2);
    assert_eq!(exec(&["field", "--q", "5", "--format", "csv"]).0, 2);
    let (code, out, _) = exec(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify-all"));
    // the worked example does not reproduce its printed residues
    assert_eq!(exec(&["ag", "example"]).0, 1);
    assert_eq!(exec(&["cyclic", "dkl", "--q", "3", "--k", "3", "--l", "2"]).0, 0);
    assert_eq!(exec(&["cyclic", "dkl", "--q", "3", "--k", "2", "--l", "0"]).0, 1);
}

#[test]
fn error_messages_go_to_stderr() {
    let (code, out, err) = exec(&["field", "--p", "4", "--m", "2"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.starts_with("error:"), "{err}");
}

#[test]
fn field_report() {
    let (code, doc) = json(&["field", "--q", "5"]);
    assert_eq!(code, 0);
    assert_eq!(doc["field"]["modulus"], serde_json::json!([2, 4, 1]));
    let (code, doc) = json(&["field", "--q", "3", "--field-modulus", "2,1,1"]);
    assert_eq!(code, 0);
    assert_eq!(doc["field"]["modulus"], serde_json::json!([2, 1, 1]));
}

#[test]
fn markdown_output() {
    let (code, out, _) = exec(&["grs", "construct", "--family", "CON2", "--q", "5", "--k", "3", "--format", "markdown"]);
    assert_eq!(code, 0);
    assert!(out.contains('|'));
    assert!(out.contains("PASS"));
}

#[test]
fn params_from_saved_report() {
    let path = scratch("con2.json");
    let (code, saved, _) = exec(&["grs", "construct", "--family", "CON2", "--q", "7", "--k", "6"]);
    assert_eq!(code, 0);
    std::fs::write(&path, saved).unwrap();
    let p = path.to_str().unwrap();
    let (code, doc) = json(&["quantum", "params", "--from", p, "--propagate", "2"]);
    assert_eq!(code, 0);
    // [48, 6] with a 5-dimensional hull
    assert_eq!(doc["code"]["n"], 48);
    assert_eq!(doc["code"]["kappa"], 37);
    assert_eq!(doc["code"]["c"], 1);
    assert_eq!(doc["propagated"]["kappa"], 39);
    assert_eq!(doc["propagated"]["c"], 3);
    assert_eq!(doc["singleton"]["mds"], true);
    assert_eq!(exec(&["quantum", "params", "--from", p, "--propagate", "6"]).0, 2);
    assert_eq!(exec(&["quantum", "params", "--from", "/nonexistent/report.json"]).0, 2);
}

#[test]
fn timings_go_to_a_separate_file() {
    let path = scratch("timings.json");
    let p = path.to_str().unwrap();
    let (code, a, _) = exec(&["field", "--q", "7", "--timings", p]);
    assert_eq!(code, 0);
    let t: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(t["elapsed_ms"].as_f64().unwrap() >= 0.0);
    assert!(t["command"].as_str().unwrap().contains("field"));
    // the document itself carries no timing
    assert_eq!(a, exec(&["field", "--q", "7"]).1);
}

#[test]
fn ag_commands() {
    let (code, doc) = json(&["ag", "grow", "--q", "5", "--steps", "2"]);
    assert_eq!(code, 0);
    assert_eq!(doc["sizes"], serde_json::json!([5, 7, 9]));
    let (code, doc) = json(&["ag", "hull", "--family", "COR2", "--q", "4", "--t", "3", "--k", "2"]);
    assert_eq!(code, 0, "{doc}");
    let (code, _) = json(&["ag", "build", "--family", "COR1", "--q", "5", "--s", "13", "--k", "1", "--extended"]);
    assert_eq!(code, 1);
}

#[test]
fn quantum_tables_exit_status() {
    let (code, out, _) = exec(&["quantum", "tables", "--q", "7", "--format", "markdown"]);
    assert_eq!(code, 1);
    assert!(out.contains("[[33,10,16;8]]"));
}
