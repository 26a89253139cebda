//! Binary-level tests: exit codes, output schemas, error surfaces.

use std::process::{Command, Output};

fn nuplus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nuplus"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn help_succeeds() {
    let out = nuplus(&["help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("KNOT GRAMMAR"));
}

#[test]
fn missing_command_is_usage_error() {
    let out = nuplus(&[]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn unknown_command_is_usage_error() {
    let out = nuplus(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("unknown command"));
}

#[test]
fn unknown_flag_is_usage_error() {
    let out = nuplus(&["pair", "T(2,3)", "U", "--fast"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn syntax_error_is_position_annotated() {
    let out = nuplus(&["invariants", "T(3;7)"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("position 3"), "{}", stderr(&out));
}

#[test]
fn domain_rejection_exits_two() {
    let out = nuplus(&["invariants", "T(4,6)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("gcd"), "{}", stderr(&out));

    let out = nuplus(&["deform", "T(4,9)", "T(6,7)"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn pair_json_schema() {
    let out = nuplus(&["pair", "T(3,7)", "T(4,5)", "--json", "--surgery", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let obj = value.as_object().unwrap();
    for key in [
        "knot_k",
        "knot_l",
        "delta_k",
        "delta_l",
        "nu_kl",
        "nu_lk",
        "v_kl",
        "v_lk",
        "cobordism_genus_bound",
        "gordian_bound",
        "concordance_bounds",
        "surgery",
    ] {
        assert!(obj.contains_key(key), "missing {key}");
    }
    assert_eq!(value["nu_kl"], 1);
    assert_eq!(value["nu_lk"], 1);
    assert_eq!(value["v_kl"]["values"], serde_json::json!([1, 0]));
    assert_eq!(value["v_kl"]["nu_plus"], 1);
    // correction terms are exact fraction strings
    let d = value["surgery"]["d_kl"].as_array().unwrap();
    assert!(d.iter().all(|x| x.is_string()));
}

#[test]
fn pair_without_surgery_has_null_field() {
    let out = nuplus(&["pair", "T(2,3)", "U", "--json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(value["surgery"].is_null());
}

#[test]
fn deform_json_schema_and_witness() {
    let out = nuplus(&["deform", "T(6,7)", "T(4,9)", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let o = &value["obstruction"];
    assert_eq!(o["verdict"], "obstructed");
    assert_eq!(o["reason"], "semicontinuity");
    assert_eq!(o["witness"], 8);
    assert_eq!(o["delta_k"], 15);
    assert_eq!(o["delta_l"], 12);
    assert_eq!(o["genus_budget"], 3);
    assert_eq!(o["nu_kl"], 4);
    assert_eq!(o["nu_lk"], 0);
}

#[test]
fn invariants_json_schema() {
    let out = nuplus(&["invariants", "T(4,5)", "--json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["function"]["delta"], 6);
    assert_eq!(value["staircase"]["a"], serde_json::json!([0, 3, 5, 6]));
    assert_eq!(
        value["staircase"]["a_prime"],
        serde_json::json!([0, 1, 3, 6])
    );
    assert_eq!(value["nu_plus"], 6);
    assert_eq!(
        value["alexander_exponents"],
        serde_json::json!([6, 5, 2, 0, -2, -5, -6])
    );
}

#[test]
fn oracle_command_passes_and_clamps_truncation() {
    let out = nuplus(&["oracle", "T(3,7)", "T(4,5)"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("PASS"));

    // a tiny --trunc is clamped up to the safe floor instead of failing
    let out = nuplus(&["oracle", "T(3,7)", "T(4,5)", "--trunc", "1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["truncation"], 32);
    assert_eq!(value["matches"], true);
}

#[test]
fn csv_output_has_one_row_per_quantity() {
    let out = nuplus(&["pair", "T(3,7)", "T(4,5)", "--csv"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("knot_k,knot_l,quantity,value"));
    assert!(text.contains("\"T(3,7)\",\"T(4,5)\",nu_kl,1"));
    assert!(text.contains("\"T(3,7)\",\"T(4,5)\",v_kl,1 0"));
}

#[test]
fn verbose_pair_shows_gamma_profile() {
    let out = nuplus(&["pair", "T(3,7)", "T(4,5)", "--verbose", "--max-n", "8"]);
    let text = stdout(&out);
    assert!(text.contains("gamma_L(n) - gamma_K(n):"));
    assert!(text.contains("n =    8"));
}

#[test]
fn unknot_report_is_trivial() {
    let out = nuplus(&["invariants", "U", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["function"]["delta"], 0);
    assert_eq!(value["function"]["prefix"], serde_json::json!([0]));
    assert_eq!(value["gaps"], serde_json::json!([]));
    assert_eq!(value["nu_plus"], 0);
    assert_eq!(value["v_sequence"]["values"], serde_json::json!([0]));
    assert_eq!(value["alexander_exponents"], serde_json::json!([0]));
}

#[test]
fn render_round_trip_via_cli() {
    // G form echoes the same function the T form resolves to
    let t = nuplus(&["invariants", "T(3,7)", "--json"]);
    let g = nuplus(&["invariants", "G[0,3,6,7,9,10,12;6]", "--json"]);
    let tv: serde_json::Value = serde_json::from_str(&stdout(&t)).unwrap();
    let gv: serde_json::Value = serde_json::from_str(&stdout(&g)).unwrap();
    assert_eq!(tv["function"]["prefix"], gv["function"]["prefix"]);
    assert_eq!(tv["v_sequence"], gv["v_sequence"]);
}
