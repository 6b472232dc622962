use std::fs;
use std::process::{Command, Output};

use erq_cli::{decode_line, LogEntry};
use serde_json::Value;

fn erq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_erq"))
        .args(args)
        .env_remove("ERQ_LOG")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = erq(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const SETS: &str = r#"[{"ap":{"start":"1","step":"1","count":6}},{"gp":{"start":"1","ratio":"2","count":6}}]"#;

#[test]
fn mixed_quadratic_is_an_expander() {
    let v = json(&["classify", "--vars", "x,y,z", "x^2+x*y+z"]);
    assert_eq!(v["over_Q"], "expander");
    assert_eq!(v["over_R"], "expander");
    assert!(v.get("certificate").map_or(true, Value::is_null));
}

#[test]
fn linear_power_witness_meets_bound() {
    let v = json(&["witness", "--form", "(x+2*y)^3", "--n", "10"]);
    // x -> x^3 is injective, so the image has as many points as x + 2y.
    let values = |s: &Value| -> Vec<f64> {
        let ap = &s["ap"];
        let num = |k: &str| {
            let t = ap[k].as_str().unwrap();
            let (p, q) = t.split_once('/').unwrap_or((t, "1"));
            p.parse::<f64>().unwrap() / q.parse::<f64>().unwrap()
        };
        let n = ap["count"].as_u64().unwrap();
        (0..n).map(|i| num("start") + i as f64 * num("step")).collect()
    };
    let (a, b) = (values(&v["sets"][0]), values(&v["sets"][1]));
    let mut image: Vec<i64> = a
        .iter()
        .flat_map(|x| b.iter().map(move |y| ((x + 2.0 * y) * 1e6).round() as i64))
        .collect();
    image.sort();
    image.dedup();
    assert_eq!(v["count"], image.len());
    assert_eq!(v["bound"], 2 * (10 - 1) + 1);
    assert_eq!(v["holds"], true);
}

#[test]
fn homogeneous_classification_is_reported() {
    let v = json(&["classify", "2*x^3*y^3"]);
    assert_eq!(v["homogeneous"]["form"], "monomial_power");
    let v = json(&["classify", "x^2+y^2"]);
    assert_eq!(v["homogeneous"]["form"], "expander");
}

#[test]
fn syntax_error_names_the_column() {
    let out = erq(&["parse", "--vars", "x", "x^^2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("column 3"), "{err}");
    assert!(!err.contains("panicked"));
    assert!(out.stdout.is_empty());
}

#[test]
fn unknown_variable_is_rejected() {
    let out = erq(&["classify", "--vars", "x,y", "x+w"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_set_spec_is_rejected() {
    let out = erq(&["expand", "x+y", "--sets", "[{\"ap\":{}}]"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unwritable_log_fails() {
    let out = erq(&["expand", "x+y", "--sets", SETS, "--log", "/nonexistent/dir/run.jsonl"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_reproducible() {
    for args in [
        &["expand", "x*y+x", "--sets", SETS][..],
        &["decompose", "(x^2+1)*(y^3+y)"],
        &["probe", "intersection", "x^2+1", "--generators", "2,5", "--height", "40"],
        &["witness", "--example1", "--n", "6"],
    ] {
        let a = erq(args);
        let b = erq(args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn decompose_certificates_recompose() {
    let v = json(&["decompose", "x^2+2*x*y+y^2+x+y"]);
    assert_eq!(v["linear"]["form"], "linear");
    assert_eq!(v["additive"]["form"], "additive");
    assert!(v["power_product"].is_null());
    let v = json(&["decompose", "--vars", "x,y,z", "(x+1)^2*(z-3)^4"]);
    assert_eq!(v["power_product"]["form"], "power_product");
    assert_eq!(v["active_variables"], serde_json::json!(["x", "z"]));
}

#[test]
fn log_gets_one_line_per_run() {
    let dir = tempfile::tempdir().unwrap();
    let log = dir.path().join("runs.jsonl");
    let log_s = log.to_str().unwrap();
    for _ in 0..3 {
        assert!(erq(&["expand", "x+y", "--sets", SETS, "--log", log_s]).status.success());
    }
    let status = Command::new(env!("CARGO_BIN_EXE_erq"))
        .args(["probe", "squares", "--n", "100"])
        .env("ERQ_LOG", log_s)
        .status()
        .unwrap();
    assert!(status.success());
    let sums: std::collections::BTreeSet<i64> =
        (1..=6).flat_map(|a| (0..6).map(move |k| a + (1 << k))).collect();
    let text = fs::read_to_string(&log).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    for l in &lines[..3] {
        match decode_line(l).unwrap() {
            LogEntry::Experiment(r) => {
                assert_eq!(r.count, sums.len() as u64);
                assert!(r.timestamp.is_some());
            }
            other => panic!("unexpected {other:?}"),
        }
    }
    assert!(matches!(decode_line(lines[3]).unwrap(), LogEntry::Probe(_)));
}

#[test]
fn logging_does_not_change_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let log = dir.path().join("runs.jsonl");
    let plain = erq(&["expand", "x-y", "--sets", SETS]);
    let logged = erq(&["expand", "x-y", "--sets", SETS, "--log", log.to_str().unwrap()]);
    assert_eq!(plain.stdout, logged.stdout);
}

#[test]
fn text_format() {
    let out = erq(&["--format", "text", "classify", "(x^2+1)*(y^3+y)"]);
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.starts_with("over Q: "));
    assert!(s.contains("certificate: multiplicative"));
}
