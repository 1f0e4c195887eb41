use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_elastowave"))
}

fn call(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn write(dir: &Path, name: &str, v: &Value) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, serde_json::to_string_pretty(v).unwrap()).unwrap();
    p
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn repo_config(name: &str) -> String {
    format!("{}/../../configs/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn small_run(eps: f64) -> Value {
    json!({
        "material": { "preset": "genuinely_nonlinear" },
        "grid": { "N": 32, "L": 16 },
        "time": { "cfl": 0.5, "T": 1, "sample_every": 2 },
        "data": { "kind": "radial", "eps": eps, "displacement": { "width": 4, "exponent": 6 } }
    })
}

#[test]
fn derive_reports_null_example_as_doubly_null() {
    let o = call(&["derive", &repo_config("null_material.json")]);
    assert!(o.status.success());
    let v = stdout_json(&o);
    assert_eq!(v["first_null"], json!(true));
    assert_eq!(v["second_null"], json!(true));
    assert_eq!(v["coefficients"]["c1sq"], json!("4"));
    assert_eq!(v["coefficients"]["e5"], json!("12"));
}

#[test]
fn derive_flags_default_material_as_not_null() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "m.json", &json!({ "sigma": { "sigma11": 1, "sigma2": -1 } }));
    let v = stdout_json(&call(&["derive", p.to_str().unwrap()]));
    assert_eq!(v["first_null"], json!(false));
    assert_eq!(v["coefficients"]["d1"], json!("2"));
}

#[test]
fn check_exits_zero_when_procedures_agree() {
    let o = call(&["check", &repo_config("null_material.json")]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_battery_passes() {
    let o = call(&["verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));
    assert!(!String::from_utf8_lossy(&o.stdout).contains("FAIL"));
}

#[test]
fn reduce_rejects_material_without_first_null() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "m.json", &json!({ "preset": "genuinely_nonlinear" }));
    assert_eq!(call(&["reduce", p.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn simulate_zero_amplitude_keeps_zero_energy() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "run.json", &small_run(0.0));
    let out = dir.path().join("out");
    let o = call(&["simulate", cfg.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let rep: Value = serde_json::from_str(&std::fs::read_to_string(out.join("report.json")).unwrap()).unwrap();
    assert_eq!(rep["report"]["termination"]["status"], json!("completed"));
    let mut rows = csv::Reader::from_path(out.join("series.csv")).unwrap();
    for r in rows.records() {
        let r = r.unwrap();
        assert_eq!(r[1].parse::<f64>().unwrap(), 0.0);
    }
    assert!(out.join("metadata.json").exists());
}

#[test]
fn simulate_report_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "run.json", &small_run(0.05));
    let mut reports = vec![];
    for k in 0..2 {
        let out = dir.path().join(format!("out{k}"));
        assert!(call(&["simulate", cfg.to_str().unwrap(), "--out", out.to_str().unwrap()]).status.success());
        reports.push(std::fs::read(out.join("report.json")).unwrap());
    }
    assert_eq!(reports[0], reports[1]);
}

#[test]
fn bad_inputs_exit_one() {
    assert_eq!(call(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(call(&["derive", "/nonexistent/config.json"]).status.code(), Some(1));

    let dir = tempfile::tempdir().unwrap();
    let unstable = write(dir.path(), "m.json", &json!({ "sigma": { "sigma11": 1, "sigma2": 1 } }));
    assert_eq!(call(&["derive", unstable.to_str().unwrap()]).status.code(), Some(1));

    let mut run = small_run(0.0);
    run["grid"]["N"] = json!(48);
    let p = write(dir.path(), "run.json", &run);
    assert_eq!(call(&["simulate", p.to_str().unwrap()]).status.code(), Some(1));

    let mut run = small_run(0.0);
    run["extra"] = json!({});
    let p = write(dir.path(), "run2.json", &run);
    assert_eq!(call(&["simulate", p.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn help_exits_zero() {
    assert_eq!(call(&["--help"]).status.code(), Some(0));
}
