use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: Option<&str>) -> (i32, Value) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_extraspecial"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(text) = stdin {
        child
            .stdin
            .take()
            .unwrap()
            .write_all(text.as_bytes())
            .unwrap();
    }
    drop(child.stdin.take());
    let out = child.wait_with_output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let value = serde_json::from_str(text.trim()).unwrap_or_else(|e| panic!("{e}: {text:?}"));
    (out.status.code().unwrap(), value)
}

fn make(descriptor: &str) -> String {
    let (code, v) = run(&["make", descriptor], None);
    assert_eq!(code, 0);
    v.to_string()
}

const J2: &str =
    r#"{"field":{"kind":"Q"},"dim":3,"basis":["x1","x2","z"],"products":[[0,1,2,"1"]]}"#;

#[test]
fn make_prints_a_document() {
    let (code, v) = run(&["make", "j:1"], None);
    assert_eq!(code, 0);
    assert_eq!(v["dim"], 2);
    assert_eq!(v["products"], serde_json::json!([[0, 0, 1, "1"]]));
    let (code, v) = run(&["make", "h2:2", "--field", "GF(5)"], None);
    assert_eq!(code, 0);
    assert_eq!(v["field"], serde_json::json!({"kind": "GF", "p": 5}));
}

#[test]
fn check_identities() {
    let (code, v) = run(&["check", "-", "--identity", "assoc"], Some(J2));
    assert_eq!(code, 0);
    assert_eq!(v["holds"], true);
    let bad = r#"{"field":{"kind":"Q"},"dim":2,"products":[[0,1,0,"1"]]}"#;
    let (code, v) = run(&["check", "-", "--identity", "assoc"], Some(bad));
    assert_eq!(code, 0);
    assert_eq!(v["holds"], false);
    assert_eq!(v["violation"], serde_json::json!([0, 1, 1]));
    let dia =
        r#"{"field":{"kind":"Q"},"dim":3,"products":[[0,1,2,"1"]],"right_products":[[1,1,0,"1"]]}"#;
    let (code, v) = run(&["check", "-", "--identity", "diassoc"], Some(dia));
    assert_eq!(code, 0);
    assert_eq!(v["holds"], false);
    assert_eq!(v["axiom"], 5);
}

#[test]
fn invariants_and_multiplier() {
    let (_, v) = run(&["invariants", "-"], Some(J2));
    assert_eq!(v["center_dim"], 1);
    assert_eq!(v["derived_dim"], 1);
    assert_eq!(v["extra_special"], true);
    let (_, v) = run(&["multiplier", "-", "--theory", "assoc"], Some(J2));
    assert_eq!(v["multiplier_dim"], 3);
    let (_, v) = run(&["multiplier", "-", "--theory", "leibniz"], Some(J2));
    assert_eq!(v["multiplier_dim"], 4);
}

#[test]
fn cover_zstar_capable_unicentral() {
    let j1 = make("j:1");
    let (code, v) = run(&["cover", "-"], Some(&j1));
    assert_eq!(code, 0);
    assert_eq!(v["cover"]["products"].as_array().unwrap().len(), 3);
    assert_eq!(v["stem"], true);
    let (_, v) = run(&["zstar", "-"], Some(&j1));
    assert_eq!(v["dim"], 0);
    let (_, v) = run(&["capable", "-"], Some(&j1));
    assert_eq!(v["capable"], true);
    let (code, v) = run(&["unicentral", "-"], Some(&make("gamma:3")));
    assert_eq!(code, 0);
    assert_eq!(v["unicentral"], true);
}

#[test]
fn classify_round_trip() {
    let (code, v) = run(&["classify", "-"], Some(&make("j:3+h2:3+gamma:2")));
    assert_eq!(code, 0);
    assert_eq!(v["classification"], "j:3+gamma:2+h2:1/3");
}

#[test]
fn exit_codes() {
    let (code, v) = run(&["classify", "-"], Some("{not json"));
    assert_eq!(code, 2);
    assert_eq!(v["error"], "input");
    let gf2 = r#"{"field":{"kind":"GF","p":2},"dim":1,"products":[]}"#;
    let (code, v) = run(&["invariants", "-"], Some(gf2));
    assert_eq!(code, 2);
    assert_eq!(v["error"], "unsupported_field");
    // Form [[1, 1], [-1, 1]]: its cosquare is a quarter turn.
    let rotation = r#"{"field":{"kind":"Q"},"dim":3,"products":[[0,0,2,"1"],[0,1,2,"1"],[1,0,2,"-1"],[1,1,2,"1"]]}"#;
    let (code, v) = run(&["classify", "-"], Some(rotation));
    assert_eq!(code, 3);
    assert_eq!(v["error"], "unsupported");
    let (code, _) = run(
        &["classify", "-"],
        Some(r#"{"field":{"kind":"Q"},"dim":2,"products":[]}"#),
    );
    assert_eq!(code, 2);
    let (code, _) = run(&["make", "h2:1"], None);
    assert_eq!(code, 2);
}

#[test]
fn verify_theorems_small_sweep() {
    let (code, v) = run(
        &["verify-theorems", "--max-n", "3", "--lambdas", "3,-1"],
        None,
    );
    assert_eq!(code, 0);
    assert_eq!(v["failures"], 0);
    let rows = v["rows"].as_array().unwrap();
    let gamma3 = rows.iter().find(|r| r["name"] == "gamma:3").unwrap();
    assert_eq!(gamma3["assoc_multiplier"], 8);
    assert_eq!(gamma3["capable"], false);
    assert_eq!(gamma3["unicentral"], true);
    assert_eq!(gamma3["pass"], true);
}
