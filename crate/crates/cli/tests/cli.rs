use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superjordan"))
        .args(args)
        .env_remove("SUPERJORDAN_ORDER")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = run(&all);
    let value = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (out.status.code().unwrap(), value)
}

#[test]
fn relations_pass_in_fund_and_fund2() {
    for rep in ["fund", "fund2"] {
        let (code, v) = json(&["verify", "relations", "--rep", rep]);
        assert_eq!(code, 0);
        assert_eq!(v["pass"], true);
        assert_eq!(v["representations"][0]["representation"], rep);
    }
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["verify", "relations", "--rep", "adjoint"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "identities", "--order", "0"]).status.code(), Some(2));
    assert_eq!(run(&["ybe", "--which", "q", "--numeric", "--q0", "1"]).status.code(), Some(2));
    assert_eq!(run(&["ybe", "--which", "q", "--numeric", "--q0", "-1"]).status.code(), Some(2));
    assert_eq!(run(&["ybe", "--which", "h", "--rep", "fund2"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn identity_records_carry_channel_params_and_verdict() {
    let (code, v) = json(&["verify", "identities", "--order", "1", "--rep", "fund"]);
    assert_eq!(code, 0);
    let records = v["records"].as_array().unwrap();
    for channel in ["symbolic", "matrix"] {
        assert!(records.iter().any(|r| r["channel"] == channel));
    }
    for r in records {
        assert!(r["params"].is_string() && r["holds"].is_boolean() && r["identity"].is_string());
        if r["diagnostic"] == false {
            assert_eq!(r["holds"], true, "{r}");
        }
    }
}

#[test]
fn order_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_superjordan"))
        .args(["--format", "json", "verify", "identities", "--rep", "fund"])
        .env("SUPERJORDAN_ORDER", "2")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["order"], 2);
    let (_, v) = json(&["verify", "identities", "--rep", "fund", "--order", "1"]);
    assert_eq!(v["order"], 1);
}

#[test]
fn identities_default_to_fund2() {
    let (code, v) = json(&["verify", "identities", "--order", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["representation"], "fund2");
}

#[test]
fn jordanian_run_dumps_four_stages() {
    let dir = tempfile::tempdir().unwrap();
    let stages = dir.path().join("stages");
    let (code, v) = json(&["jordanian", "run", "--rep", "fund", "--dump-stages", stages.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["limit_equals_assembled"], true);
    assert_eq!(v["rh_properties"]["ybe"]["residual_nnz"], 0);
    let mut names: Vec<_> = std::fs::read_dir(&stages).unwrap().map(|e| e.unwrap().file_name().into_string().unwrap()).collect();
    names.sort();
    assert_eq!(names, ["assembled.json", "conjugated.json", "limit.json", "valuations.json"]);
    let limit: Value = serde_json::from_str(&std::fs::read_to_string(stages.join("limit.json")).unwrap()).unwrap();
    assert_eq!(limit["dim_row"], 9);
}

#[test]
fn jordanian_run_fund2_with_numeric_check() {
    let (code, v) = json(&["jordanian", "run", "--rep", "fund2", "--numeric"]);
    assert_eq!(code, 0);
    assert_eq!(v["numeric"].as_array().unwrap().len(), 2);
}

#[test]
fn rmatrix_build_matches_block_form_and_writes_bundle() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let (code, v) = json(&["rmatrix", "build", "--rep", "fund", "--check-block-form", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["equals_block_form"], true);
    let bundle: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    for key in ["kq", "rhat", "r"] {
        assert_eq!(bundle[key]["dim_row"], 9, "{key}");
    }
}

#[test]
fn ybe_residuals_vanish() {
    for which in ["q", "h"] {
        let (code, v) = json(&["ybe", "--which", which, "--rep", "fund"]);
        assert_eq!(code, 0);
        assert_eq!(v["residual_nnz"], 0);
        assert_eq!(v["dim"], 27);
    }
    let (code, _) = json(&["rmatrix", "ybe", "--rep", "fund"]);
    assert_eq!(code, 0);
}

#[test]
fn json_output_is_deterministic() {
    let args = ["--format", "json", "jordanian", "run", "--rep", "fund", "--numeric"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let text = run(&["verify", "identities", "--order", "1"]);
    assert_eq!(text.stdout, run(&["verify", "identities", "--order", "1"]).stdout);
}
