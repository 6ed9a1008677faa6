//! Runs the `exlab` binary and validates every report against the schema
//! shipped for its command.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn schema_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/schemas")
}

fn exlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_exlab"))
        .args(args)
        .env_remove("EXLAB_BUDGET")
        .output()
        .unwrap()
}

fn validate(schema_name: &str, doc: &Value) {
    let path = schema_dir().join(format!("{schema_name}.schema.json"));
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator.iter_errors(doc).map(|e| format!("{} at {}", e, e.instance_path())).collect();
    assert!(errors.is_empty(), "{schema_name}: {errors:#?}\n{doc:#}");
}

fn report(args: &[&str]) -> Value {
    let out = exlab(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stdout));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    validate(doc["command"].as_str().unwrap(), &doc);
    doc
}

#[test]
fn every_command_matches_its_schema() {
    let cases: &[&[&str]] = &[
        &["check", "--kind", "det", "--family", "cycle", "--params", "6", "--set", "0,1"],
        &["check", "--kind", "res", "--family", "wheel", "--params", "8", "--set", "0,4,6"],
        &["number", "--kind", "det", "--family", "hypercube", "--params", "3"],
        &["number", "--kind", "res", "--family", "kneser", "--params", "5,2"],
        &["minimal-sets", "--kind", "det", "--family", "kneser", "--params", "5,2"],
        &["minimal-sets", "--kind", "res", "--family", "star", "--params", "4", "--max-size", "2"],
        &["exchange", "--kind", "res", "--family", "kneser", "--params", "5,2"],
        &["exchange", "--kind", "det", "--family", "path", "--params", "5"],
        &["wheel-report", "--n-range", "7..=9"],
        &["tree-report", "--family", "randomTree", "--params", "9", "--seed", "4"],
        &["tree-report", "--family", "path", "--params", "5"],
        &["outerplanar-report", "--family", "randomOuterplanar", "--params", "8", "--seed", "3"],
        &["outerplanar-report", "--family", "cycle", "--params", "6"],
        &["outerplanar-report", "--family", "complete", "--params", "4"],
        &["oracle-compare", "--suite", "all", "--count", "3"],
    ];
    for args in cases {
        report(args);
    }
}

#[test]
fn documented_examples() {
    let ex = report(&["exchange", "--kind", "res", "--family", "kneser", "--params", "5,2"]);
    assert_eq!(ex["result"]["holds"], false);
    assert!(ex["result"]["witness"].is_object());
    let num = report(&["number", "--kind", "det", "--family", "wheel", "--params", "9"]);
    assert_eq!(num["result"]["value"], 2);
}

#[test]
fn timing_and_label_offset() {
    let doc = report(&["--timing", "number", "--kind", "det", "--family", "cycle", "--params", "5"]);
    assert!(doc["elapsedMillis"].is_u64());
    let doc = report(&["--label-offset", "1", "check", "--kind", "res", "--family", "wheel", "--params", "8", "--set", "1,5,7"]);
    assert_eq!(doc["result"]["accepted"], true);
    assert_eq!(doc["result"]["set"], serde_json::json!([1, 5, 7]));
}

#[test]
fn identical_arguments_give_identical_bytes() {
    let args = ["oracle-compare", "--suite", "outerplanar", "--count", "4", "--seed", "11"];
    assert_eq!(exlab(&args).stdout, exlab(&args).stdout);
    let args = ["gen", "--family", "randomOuterplanar", "--params", "9", "--seed", "5"];
    assert_eq!(exlab(&args).stdout, exlab(&args).stdout);
}

#[test]
fn errors_are_structured_json() {
    let cases: &[(&[&str], i32, &str)] = &[
        (&["number", "--kind", "x", "--family", "cycle", "--params", "5"], 1, "argument"),
        (&["number", "--kind", "det", "--family", "cycle", "--params", "2"], 1, "parameter"),
        (&["check", "--kind", "det", "--family", "cycle", "--params", "5", "--set", "9"], 1, "argument"),
        (&["tree-report", "--family", "cycle", "--params", "5"], 1, "domain"),
        (&["number", "--kind", "res", "--family", "kneser", "--params", "7,2", "--budget", "1"], 2, "budget"),
        (&["frobnicate"], 1, "argument"),
    ];
    for (args, code, tag) in cases {
        let out = exlab(args);
        assert_eq!(out.status.code(), Some(*code), "{args:?}");
        let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
        validate("error", &doc);
        assert_eq!(doc["error"]["code"], *tag, "{args:?}");
    }
}

#[test]
fn graph_from_stdin() {
    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_exlab"))
        .args(["number", "--kind", "res", "--graph", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    // Petersen graph.
    child.stdin.take().unwrap().write_all(b"IheA@GUAo\n").unwrap();
    let out = child.wait_with_output().unwrap();
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    validate("number", &doc);
    assert_eq!(doc["result"]["value"], 3);
}
