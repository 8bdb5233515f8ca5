//! End-to-end runs of the `lqw` binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn lqw(args: &[&str], out: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lqw"))
        .args(args)
        .arg("--out")
        .arg(out)
        .env_remove("LQW_THREADS")
        .output()
        .expect("binary runs")
}

fn summary(output: &Output) -> Value {
    assert!(output.status.success(), "stderr: {}", String::from_utf8_lossy(&output.stderr));
    serde_json::from_slice(&output.stdout).expect("JSON summary on stdout")
}

const M5: &str = "(0,0);(0,2);(0,4);(0,6);(0,8)";

#[test]
fn simulate_writes_series_and_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sim");
    let s = summary(&lqw(
        &["simulate", "--grid", "rectangular", "--side", "24", "--marked", M5, "--l", "0.03472", "--dump-state"],
        &out,
    ));
    let csv = fs::read_to_string(out.join("series.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("t,p"));
    let first: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(first[0], "0");
    assert!((first[1].parse::<f64>().unwrap() - 5.0 / 576.0).abs() < 1e-15);
    assert!(s["p_peak"].as_f64().unwrap() > 0.8);
    assert_eq!(s["grew"], Value::Bool(true));

    let sidecar: Value = serde_json::from_str(&fs::read_to_string(out.join("run.json")).unwrap()).unwrap();
    assert_eq!(sidecar["command"], "simulate");
    assert_eq!(sidecar["config"]["grid"], "rectangular");
    assert!(sidecar["version"].is_string());
    assert!(fs::read_to_string(out.join("state.csv")).unwrap().starts_with("index,x,y,c,re,im\n"));
}

#[test]
fn simulate_empty_marked_set_is_flat_zero() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("empty");
    summary(&lqw(
        &["simulate", "--grid", "triangular", "--side", "8", "--marked", "", "--l", "0.1", "--steps", "100"],
        &out,
    ));
    let csv = fs::read_to_string(out.join("series.csv")).unwrap();
    let rows: Vec<&str> = csv.lines().skip(1).collect();
    assert_eq!(rows.len(), 101);
    assert!(rows.iter().all(|r| r.split(',').nth(1).unwrap().parse::<f64>().unwrap() == 0.0));
}

#[test]
fn simulate_pattern_json_format() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("json");
    summary(&lqw(
        &[
            "simulate", "--grid", "honeycomb", "--side", "24", "--pattern", "row-even", "--m", "5", "--schedule", "m",
            "--format", "json",
        ],
        &out,
    ));
    let v: Value = serde_json::from_str(&fs::read_to_string(out.join("series.json")).unwrap()).unwrap();
    assert_eq!(v["t"].as_array().unwrap().len(), v["p"].as_array().unwrap().len());
}

#[test]
fn scan_single_point_and_list() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("one");
    summary(&lqw(&["scan", "--grid", "rectangular", "--side", "24", "--marked", M5, "--l-list", "0.0347"], &out));
    let csv = fs::read_to_string(out.join("scan.csv")).unwrap();
    assert_eq!(csv.lines().count(), 2);
    assert!(csv.starts_with("l,p_peak,t_peak\n"));

    let out = dir.path().join("bracket");
    summary(&lqw(&["scan", "--grid", "triangular", "--side", "24", "--marked", M5, "--scan", "0:0.1:11"], &out));
    let csv = fs::read_to_string(out.join("scan.csv")).unwrap();
    let p: Vec<f64> = csv.lines().skip(1).map(|r| r.split(',').nth(1).unwrap().parse().unwrap()).collect();
    assert_eq!(p.len(), 11);
    let best = p.iter().copied().fold(0.0, f64::max);
    assert!(best > p[0] && best > p[10]);
}

#[test]
fn scan_optimize_honeycomb() {
    let dir = tempfile::tempdir().unwrap();
    let s = summary(&lqw(
        &["scan", "--grid", "honeycomb", "--side", "24", "--marked", M5, "--optimize"],
        &dir.path().join("opt"),
    ));
    let l_opt = s["l_opt"].as_f64().unwrap();
    assert!((l_opt - 0.0207).abs() / 0.0207 < 0.2, "l_opt = {l_opt}");
}

#[test]
fn ensemble_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "ensemble", "--grid", "rectangular", "--side", "20", "--m-fraction", "0.2", "--R", "1", "--schedule", "m",
        "--seed", "4",
    ];
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    summary(&lqw(&args, &a));
    summary(&lqw(&args, &b));
    for f in ["runs.csv", "aggregate.csv"] {
        assert_eq!(fs::read(a.join(f)).unwrap(), fs::read(b.join(f)).unwrap());
    }
    let runs = fs::read_to_string(a.join("runs.csv")).unwrap();
    assert!(runs.starts_with("m,run,seed,l,p_peak,t_peak,grew\n80,0,4,"));
    let agg = fs::read_to_string(a.join("aggregate.csv")).unwrap();
    assert!(agg.starts_with("m,mean_p,std_p,min_p,max_p,ci_p,mean_t,std_t,ci_t\n80,"));
}

#[test]
fn threads_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("env");
    let output = Command::new(env!("CARGO_BIN_EXE_lqw"))
        .args(["ensemble", "--grid", "triangular", "--side", "10", "--m-list", "1,2", "--schedule", "m", "--out"])
        .arg(&out)
        .env("LQW_THREADS", "3")
        .output()
        .unwrap();
    summary(&output);
    let sidecar: Value = serde_json::from_str(&fs::read_to_string(out.join("run.json")).unwrap()).unwrap();
    assert_eq!(sidecar["threads"], 3);
}

#[test]
fn invalid_config_names_field() {
    let dir = tempfile::tempdir().unwrap();
    let out = lqw(&["simulate", "--grid", "honeycomb", "--side", "7", "--marked", "(0,0)", "--l", "0"], dir.path());
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("invalid side"));

    let out = lqw(&["ensemble", "--grid", "rectangular", "--side", "8", "--marked", "(0,0)", "--schedule", "m"], dir.path());
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("invalid marked"));
}
