//! End-to-end checks of the binary: output shapes, the exit-code contract,
//! and determinism of seeded verification.

use std::process::{Command, Output};

use serde_json::Value;

fn germ(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_germ"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn germ_json(args: &[&str]) -> Value {
    let out = germ(args);
    assert!(
        out.status.success(),
        "expected success, stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn expand_reports_exact_coefficients() {
    let v = germ_json(&["expand", "--set", "(10)", "--depth", "2", "--json"]);
    assert_eq!(v["order"], -1);
    assert_eq!(
        v["coeffs"],
        serde_json::json!(["1/2", "1/4", "1/8", "1/16"])
    );
}

#[test]
fn expand_accepts_negative_depth_down_to_the_pole() {
    let v = germ_json(&["expand", "--set", "(10)", "--depth", "-1", "--json"]);
    assert_eq!(v["order"], -1);
    assert_eq!(v["coeffs"], serde_json::json!(["1/2"]));

    let out = germ(&["expand", "--set", "111(0)", "--depth", "-1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("below the order"));
}

#[test]
fn compare_reports_the_constant_gap() {
    let v = germ_json(&["compare", "--a", "(10)", "--b", "0(10)", "--json"]);
    assert_eq!(v["relation"], "greater");
    assert_eq!(v["witness_order"], 0);
    assert_eq!(v["leading"], "1/2");

    let v = germ_json(&["compare", "--a", "(10)", "--b", "(10)", "--json"]);
    assert_eq!(v["relation"], "equal");
    assert!(v.get("witness_order").is_none());
}

#[test]
fn optimize_emits_the_stable_report_fields() {
    let v = germ_json(&[
        "optimize", "--d", "4,7,11", "--L", "12", "--W", "13", "--json",
    ]);
    assert_eq!(v["champion"], "1101001001000(001)");
    assert_eq!(v["period_bound"], 12);
    assert_eq!(v["preperiod_window"], 13);
    assert_eq!(v["lemma6_pass"], true);
    assert!(v["candidates_compared"].as_u64().unwrap() >= 1);
    assert!(v["caveat"].as_str().unwrap().contains("not established"));
}

#[test]
fn printed_sets_reparse_everywhere() {
    let v = germ_json(&["greedy", "--d", "3,5", "--json"]);
    let literal = v["set"].as_str().unwrap();
    assert_eq!(literal, "(11100000)");

    let v = germ_json(&["avoid", "--set", literal, "--d", "3,5", "--json"]);
    assert_eq!(v["avoiding"], true);

    let v = germ_json(&["valuation", "--set", literal, "--json"]);
    assert_eq!(v["density"], "3/8");

    let champion = germ_json(&[
        "pack", "--body", "0,4,11", "--L", "12", "--W", "13", "--json",
    ]);
    assert_eq!(champion["distances"], serde_json::json!([4, 7, 11]));
    let t = champion["report"]["champion"].as_str().unwrap();
    let v = germ_json(&["avoid", "--set", t, "--d", "4,7,11", "--json"]);
    assert_eq!(v["avoiding"], true);
}

#[test]
fn encode_serializes_letter_codes() {
    let v = germ_json(&["encode", "--set", "(10)", "--d", "1", "--json"]);
    assert_eq!(v["m"], 2);
    assert_eq!(v["legal"], true);
    assert_eq!(v["rep"], serde_json::json!([1, 2]));
}

#[test]
fn probe_matches_the_geometric_partial_sum() {
    let v = germ_json(&[
        "probe", "--a", "(10)", "--b", "0(10)", "--q", "1/2", "--horizon", "10", "--json",
    ]);
    let s = &v["samples"][0];
    assert_eq!(s["partial"], "341/512");
    assert_eq!(s["tail_bound"], "1/512");

    // Named digit-parity predicates are accepted.
    let v = germ_json(&[
        "probe",
        "--a",
        "even-digits",
        "--b",
        "odd-digits",
        "--q",
        "9/10",
        "--horizon",
        "500",
        "--json",
    ]);
    assert!(v["samples"][0]["partial"].as_str().unwrap().starts_with('-'));
}

#[test]
fn singleton_body_packs_everything() {
    let v = germ_json(&["pack", "--body", "7", "--json"]);
    assert!(v["distances"].is_null());
    assert_eq!(v["report"]["champion"], "(1)");
    assert_eq!(v["union_gf"], "(1)/(1 - q)");
}

#[test]
fn exit_codes_follow_the_contract() {
    // Usage errors exit 2.
    assert_eq!(germ(&["nonsense"]).status.code(), Some(2));
    assert_eq!(
        germ(&["expand", "--set", "(10)", "--bogus"]).status.code(),
        Some(2)
    );
    // Domain errors exit 1 and name the violated precondition.
    let out = germ(&["expand", "--set", "10)2("]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("malformed set literal"));

    let out = germ(&["expand", "--set", "(0)"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("zero function"));

    let out = germ(&["probe", "--a", "(10)", "--b", "(01)", "--q", "3/2"]);
    assert_eq!(out.status.code(), Some(1));

    // Success exits 0.
    assert_eq!(germ(&["greedy", "--d", "1"]).status.code(), Some(0));
}

#[test]
fn verify_is_deterministic_for_a_fixed_seed() {
    let args = [
        "verify", "--suite", "lemma5", "--trials", "60", "--seed", "31337", "--json",
    ];
    let first = germ(&args);
    let second = germ(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);

    let v: Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["suites"][0]["name"], "lemma5");
    assert_eq!(v["suites"][0]["failures"], 0);
}

#[test]
fn verify_rejects_unknown_suites() {
    let out = germ(&["verify", "--suite", "fermat"]);
    assert_eq!(out.status.code(), Some(1));
}
