use std::process::{Command, Output};

use serde_json::Value;

fn qsphere(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsphere")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = qsphere(&all);
    let v = serde_json::from_slice(&out.stdout).expect("valid json");
    (out.status.code().unwrap(), v)
}

fn exact_values(v: &Value) -> Vec<String> {
    v["checks"].as_array().unwrap().iter().map(|c| c["exact_value"].as_str().unwrap_or("").to_string()).collect()
}

#[test]
fn report_schema() {
    let (code, v) = json(&["classical", "--n", "2"]);
    assert_eq!(code, 0);
    assert!(v["version"].is_string());
    assert_eq!(v["config"]["subcommand"], "classical");
    assert_eq!(v["config"]["n"], 2);
    for c in v["checks"].as_array().unwrap() {
        for key in ["id", "paper_anchor", "status", "exact_value", "float_value", "runtime_ms"] {
            assert!(c.get(key).is_some(), "missing {key}");
        }
        assert_eq!(c["status"], "pass");
    }
    assert_eq!(exact_values(&v), ["-1", "1"]);
}

#[test]
fn chern_table_rows() {
    let (code, v) = json(&["chern", "--n", "2"]);
    assert_eq!(code, 0);
    let values = exact_values(&v);
    assert!(values[0].starts_with("(1, 2, -1)"));
    assert!(values[1].starts_with("(2, 3, -4)"));
    assert!(values.contains(&"(1, 0)".to_string()));
}

#[test]
fn bundles_base_case() {
    let (code, v) = json(&["verify-bundles", "--n", "0"]);
    assert_eq!(code, 0);
    assert_eq!(v["checks"].as_array().unwrap().len(), 2);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["chern", "--n", "6"],
        vec!["numcheck", "--q", "1"],
        vec!["numcheck", "--q", "abc"],
        vec!["nonsense"],
        vec!["classical", "--format", "yaml"],
    ] {
        assert_eq!(qsphere(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn failing_check_exits_one() {
    let (code, v) = json(&["numcheck", "--trunc", "2"]);
    assert_eq!(code, 1);
    assert!(v["checks"].as_array().unwrap().iter().any(|c| c["status"] == "fail"));
    assert!(!v["convergence"].as_array().unwrap().is_empty());
}

#[test]
fn csv_and_text_output() {
    let out = qsphere(&["numcheck", "--format", "csv", "--trunc", "16"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("check,K,q0,value,abs_error"));
    let out = qsphere(&["k-relations", "--n", "1", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("id,paper_anchor,status,exact_value,float_value,runtime_ms"));
    assert_eq!(out.status.code(), Some(0));
    let out = qsphere(&["verify-hopf", "--n", "2"]);
    assert!(String::from_utf8(out.stdout).unwrap().contains("2/2 checks passed"));
}

#[test]
fn out_file_and_determinism() {
    let dir = std::env::temp_dir().join(format!("qsphere-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let run = || {
        let out = qsphere(&["verify-algebra", "--seed", "3", "--format", "json", "--out", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        v["checks"].as_array().unwrap().iter().map(|c| (c["id"].clone(), c["exact_value"].clone())).collect::<Vec<_>>()
    };
    assert_eq!(run(), run());
    std::fs::remove_dir_all(&dir).unwrap();
}
