use std::process::Command;

use serde_json::Value;

fn op2(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_op2")).args(args).output().expect("run op2");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn in_process(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("op2").chain(args.iter().copied());
    let code = op2_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out) = in_process(args);
    assert_eq!(code, 0, "{args:?}");
    serde_json::from_str(&out).expect("valid json")
}

#[test]
fn degrees_lists_z1() {
    let (code, out, _) = op2(&["degrees"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "s4pp: 45"));
    assert!(out.lines().any(|l| l == "s4p: 33"));
    assert_eq!(out.lines().count(), 27);
    let v = json(&["degrees", "--format", "json"]);
    assert_eq!(v["s16"], 1);
    assert_eq!(v["s0"], 78);
}

#[test]
fn both_engines_agree_on_a_square() {
    let (code, out, _) = op2(&["multiply", "s4p", "s4p", "--engine", "both"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "s8 + s8p + s8pp");
    let v = json(&["multiply", "h", "2*s4pp", "--engine", "both", "--format", "json"]);
    assert_eq!(v["solver"], v["borel"]);
}

#[test]
fn degree_of_y8() {
    let (code, out, _) = op2(&["deg-y8"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "1047361761");
    let v = json(&["deg-y8", "--format", "json"]);
    assert_eq!(v["total"], "1047361761");
    assert_eq!(v["terms"].as_array().unwrap().len(), 16);
}

#[test]
fn unknown_class_exits_2_with_valid_names() {
    let (code, _, err) = op2(&["multiply", "s4p", "s4q"]);
    assert_eq!(code, 2);
    assert!(err.contains("s4q"));
    assert!(err.contains("s4pp") && err.contains("s16"));
}

#[test]
fn bad_usage_exits_1() {
    assert_eq!(op2(&["hasse", "--space", "p2"]).0, 1);
    assert_eq!(op2(&["nonsense"]).0, 1);
    assert_eq!(op2(&["--help"]).0, 0);
}

#[test]
fn table_is_deterministic_and_keyed_by_name() {
    let (c1, a) = in_process(&["table"]);
    let (c2, b) = in_process(&["table"]);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a).unwrap();
    let rows = v.as_object().unwrap();
    assert_eq!(rows.len(), 27);
    assert!(rows.values().all(|r| r.as_object().unwrap().len() == 27));
    let keys: Vec<&String> = rows.keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert_eq!(v["s4p"]["s4p"], serde_json::json!({"s8": "1", "s8p": "1", "s8pp": "1"}));
    assert_eq!(v["s8"]["s8"], serde_json::json!({"s16": "1"}));
    assert_eq!(v["s9p"]["s8"], serde_json::json!({}));
}

#[test]
fn hasse_outputs() {
    let v = json(&["hasse", "--format", "json"]);
    assert_eq!(v["nodes"].as_array().unwrap().len(), 27);
    let bottom = v["nodes"].as_array().unwrap().iter().find(|n| n["length"] == 16).unwrap();
    assert_eq!(bottom["id"], "w16_0");
    assert_eq!(bottom["dimension"], 0);
    let s10 = json(&["hasse", "--space", "s10", "--format", "json"]);
    assert_eq!(s10["nodes"].as_array().unwrap().len(), 16);
    let (_, dot) = in_process(&["hasse", "--format", "dot"]);
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("w0_0 -> w1_0"));
    let (_, text) = in_process(&["hasse"]);
    assert!(text.contains("s8 length=8 dimension=8 degree=2"));
}

#[test]
fn invariants_and_bundles() {
    let (_, inv) = in_process(&["invariants"]);
    assert!(inv.lines().any(|l| l == "e2 = -3/4*s2"));
    let c = json(&["chern", "--format", "json"]);
    assert_eq!(c["rank"], 10);
    assert_eq!(c["classes"][4], serde_json::json!({"s4p": "1107", "s4pp": "1113"}));
    let p = json(&["chern", "--projected", "--format", "json"]);
    assert_eq!(p["rank"], 9);
    assert_eq!(p["classes"].as_array().unwrap().len(), 10);
    assert_eq!(p["classes"][5], serde_json::json!({"s5p": "2536", "s5pp": "1292"}));
    let (_, segre) = in_process(&["segre"]);
    assert!(segre.lines().any(|l| l == "s15 = 12591161406*s15"));
}

#[test]
fn roots_json() {
    let v = json(&["roots"]);
    assert_eq!(v["simple_roots"].as_array().unwrap().len(), 6);
    assert_eq!(v["positive_roots"].as_array().unwrap().len(), 36);
    assert_eq!(v["cartan"][2][3], -1);
}

#[test]
fn jordan_selftest_is_seeded() {
    let a = json(&["jordan-selftest", "--seed", "7", "--samples", "40", "--format", "json"]);
    let b = json(&["jordan-selftest", "--seed", "7", "--samples", "40", "--format", "json"]);
    assert_eq!(a, b);
    assert_eq!(a["passed"], true);
    assert_eq!(a["samples"], 40);
}
