//! End-to-end tests of the `ncphase` binary: exit codes, output formats,
//! config handling and the bundled JSON schemas.

use std::path::PathBuf;
use std::process::{Command, Output};

fn ncphase(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncphase"))
        .args(args)
        .env_remove("NCPHASE_CONFIG")
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json_of(out: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout_of(out)).expect("stdout is JSON")
}

fn assert_matches_schema(name: &str, instance: &serde_json::Value) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("schemas")
        .join(name);
    let schema: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");
    let errors: Vec<String> = validator
        .iter_errors(instance)
        .map(|e| e.to_string())
        .collect();
    assert!(errors.is_empty(), "schema {name} violations: {errors:#?}");
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("ncphase-test-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn verify_passes_and_validates_schema() {
    let out = ncphase(&["verify", "--output", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_matches_schema("verify.schema.json", &v);
    let entries = v.as_array().unwrap();
    assert!(entries.len() > 700);
    assert!(entries
        .iter()
        .all(|e| e["pass"] == serde_json::Value::Bool(true)));
}

#[test]
fn verify_seed_changes_triplets_not_verdicts() {
    let a = ncphase(&["verify", "--seed", "7", "--output", "json"]);
    let b = ncphase(&["verify", "--seed", "8", "--output", "json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(b.status.code(), Some(0));
    let (va, vb) = (json_of(&a), json_of(&b));
    let pass = |v: &serde_json::Value| {
        v.as_array()
            .unwrap()
            .iter()
            .map(|e| e["pass"].as_bool().unwrap())
            .collect::<Vec<_>>()
    };
    assert_eq!(pass(&va), pass(&vb));
}

#[test]
fn verify_corrupted_representation_fails() {
    let out = ncphase(&["verify", "--corrupt-representation", "drop-half-x"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn correction_ns_level_value() {
    let out = ncphase(&[
        "correction",
        "--n",
        "1",
        "--l",
        "0",
        "--theta-tilde",
        "1",
        "--output",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_matches_schema("correction.schema.json", &v);
    assert_eq!(v["route"], "ns_formula");
    let total = v["total"].as_f64().unwrap();
    assert!((total - 0.67544).abs() < 5e-6, "{total}");
}

#[test]
fn correction_generic_level_value() {
    let out = ncphase(&[
        "correction",
        "--n",
        "3",
        "--l",
        "2",
        "--theta-sq-tilde",
        "1",
        "--output",
        "json",
    ]);
    let v = json_of(&out);
    assert_eq!(v["route"], "generic_l_ge_2");
    assert_eq!(v["total"].as_f64().unwrap(), -1.0 / 32805.0);
}

#[test]
fn correction_si_units_block() {
    let out = ncphase(&[
        "correction",
        "--n",
        "2",
        "--l",
        "0",
        "--eta-sq-tilde",
        "1",
        "--units",
        "si",
        "--output",
        "json",
    ]);
    let v = json_of(&out);
    assert_matches_schema("correction.schema.json", &v);
    let hartree = v["total"].as_f64().unwrap();
    let joule = v["si"]["total"].as_f64().unwrap();
    assert!((joule / hartree / 4.3597447222071e-18 - 1.0).abs() < 1e-12);
}

#[test]
fn correction_l1_is_domain_error() {
    let out = ncphase(&["correction", "--n", "3", "--l", "1", "--theta-tilde", "1"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("diverges"), "{err}");
}

#[test]
fn correction_invalid_quantum_numbers_is_usage_error() {
    let out = ncphase(&["correction", "--n", "2", "--l", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn mixed_nc_forms_rejected() {
    let out = ncphase(&[
        "correction",
        "--n",
        "1",
        "--l",
        "0",
        "--l0",
        "1",
        "--theta-tilde",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn scan_rows_and_ratio() {
    let out = ncphase(&[
        "scan",
        "--n-max",
        "4",
        "--eta-sq-tilde",
        "1",
        "--output",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,l,delta_theta,delta_eta,total,route"
    );
    let rows: Vec<Vec<String>> = lines
        .map(|l| l.split(',').map(String::from).collect())
        .collect();
    // 1+2+3+4 = 10 rows
    assert_eq!(rows.len(), 10);
    // all delta_eta positive
    for r in &rows {
        assert!(r[3].parse::<f64>().unwrap() > 0.0);
    }
    // delta_eta(4,0)/delta_eta(2,0) = (16·81/24)/(4·21/24) = 108/7
    let find = |n: &str, l: &str| {
        rows.iter().find(|r| r[0] == n && r[1] == l).unwrap()[3]
            .parse::<f64>()
            .unwrap()
    };
    let ratio = find("4", "0") / find("2", "0");
    assert!((ratio - 108.0 / 7.0).abs() < 1e-12);
    // l = 1 rows: empty delta_theta and total, route unsupported
    let p_row = rows.iter().find(|r| r[0] == "2" && r[1] == "1").unwrap();
    assert_eq!(p_row[2], "");
    assert_eq!(p_row[4], "");
    assert_eq!(p_row[5], "unsupported");
}

#[test]
fn scan_n_max_three_has_six_rows() {
    let out = ncphase(&["scan", "--n-max", "3", "--output", "csv"]);
    assert_eq!(stdout_of(&out).lines().count(), 7); // header + 6
}

#[test]
fn scan_json_validates_schema() {
    let out = ncphase(&[
        "scan",
        "--n-max",
        "5",
        "--theta-sq-tilde",
        "2",
        "--eta-sq-tilde",
        "1",
        "--output",
        "json",
    ]);
    let v = json_of(&out);
    assert_matches_schema("scan.schema.json", &v);
}

#[test]
fn scan_rejects_large_n_max() {
    let out = ncphase(&["scan", "--n-max", "51"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bounds_defaults_and_schema() {
    let out = ncphase(&["bounds", "--output", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_matches_schema("bounds.schema.json", &v);
    let theta_si = v["theta"]["si_m2"].as_f64().unwrap();
    assert!(theta_si > 1e-36 && theta_si < 1e-35);
    assert_eq!(v["published_order_match"], serde_json::Value::Bool(true));
    assert_eq!(
        v["published_value_discrepancy"],
        serde_json::Value::Bool(true)
    );
}

#[test]
fn bounds_scale_with_accuracy() {
    let a = json_of(&ncphase(&["bounds", "--output", "json"]));
    let b = json_of(&ncphase(&[
        "bounds",
        "--accuracy",
        "9e-15",
        "--output",
        "json",
    ]));
    let ratio = b["theta"]["tilde"].as_f64().unwrap() / a["theta"]["tilde"].as_f64().unwrap();
    assert!((ratio - 2.0).abs() < 1e-12);
}

#[test]
fn moment_ground_state_r2() {
    let out = ncphase(&[
        "moment", "--n", "1", "--l", "0", "--s", "2", "--output", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_matches_schema("moment.schema.json", &v);
    assert_eq!(v["closed_form"], "3");
    assert_eq!(v["closed_form_value"].as_f64().unwrap(), 3.0);
    assert!(v["relative_gap"].as_f64().unwrap() < 1e-10);
}

#[test]
fn moment_divergent_is_domain_error() {
    let out = ncphase(&["moment", "--n", "2", "--l", "0", "--s", "-3"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn moment_high_order_recursion_vs_quadrature() {
    let out = ncphase(&[
        "moment", "--n", "5", "--l", "4", "--s", "6", "--output", "json",
    ]);
    let v = json_of(&out);
    assert!(v["relative_gap"].as_f64().unwrap() < 1e-9);
}

#[test]
fn config_file_with_unknown_key_is_rejected() {
    let path = temp_file("bad.json", r#"{"not_a_key": 1}"#);
    let out = ncphase(&["--config", path.to_str().unwrap(), "bounds"]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(path).ok();
}

#[test]
fn config_file_supplies_moments_and_flags_override() {
    let path = temp_file("moments.json", r#"{"eta_sq_tilde": 1.0, "output": "json"}"#);
    let out = ncphase(&[
        "--config",
        path.to_str().unwrap(),
        "correction",
        "--n",
        "1",
        "--l",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["delta_eta"].as_f64().unwrap(), 0.25);
    // flag overrides the file value
    let out = ncphase(&[
        "--config",
        path.to_str().unwrap(),
        "correction",
        "--n",
        "1",
        "--l",
        "0",
        "--eta-sq-tilde",
        "2",
    ]);
    assert_eq!(json_of(&out)["delta_eta"].as_f64().unwrap(), 0.5);
    std::fs::remove_file(path).ok();
}

#[test]
fn config_via_environment_variable() {
    let path = temp_file("env.json", r#"{"eta_sq_tilde": 4.0, "output": "json"}"#);
    let out = Command::new(env!("CARGO_BIN_EXE_ncphase"))
        .args(["correction", "--n", "1", "--l", "0"])
        .env("NCPHASE_CONFIG", &path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["delta_eta"].as_f64().unwrap(), 1.0);
    std::fs::remove_file(path).ok();
}

#[test]
fn missing_config_file_is_usage_error() {
    let out = ncphase(&["--config", "/nonexistent/ncphase.json", "bounds"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_subcommand_is_usage_error() {
    let out = ncphase(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}
