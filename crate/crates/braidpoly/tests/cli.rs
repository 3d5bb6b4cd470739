use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidpoly"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn homfly_text_and_json() {
    assert_eq!(
        stdout(&["homfly", "2: 1 1 1"]).trim(),
        "2*v^2*z^0 + -1*v^4*z^0 + 1*v^2*z^2"
    );
    assert_eq!(
        json(&["homfly", "T_2_3", "--format", "json"]),
        serde_json::json!([[2, 0, "2"], [4, 0, "-1"], [2, 2, "1"]])
    );
}

#[test]
fn specializations() {
    assert_eq!(stdout(&["jones", "2: s1^3"]).trim(), "-t^4 + t^3 + t");
    assert_eq!(stdout(&["conway", "T_2_5"]).trim(), "z^4 + 3*z^2 + 1");
    assert_eq!(
        stdout(&["alexander", "3: 1 -2 1 -2"]).trim(),
        "-t + 3 - t^-1"
    );
    assert_eq!(
        stdout(&["jones", "cable_T23"]).trim(),
        "t^13 - t^12 - t^10 + t^6 + t^3"
    );
}

#[test]
fn invariants_and_decompose() {
    let p = json(&["invariants", "H_3"]);
    assert_eq!(p["components"], 4);
    assert_eq!(p["prime"], 3);
    assert_eq!(p["split"], 1);
    let t = json(&["decompose", "4: 1 1 1 3 3 3"]);
    assert_eq!(t["type"], "split");
    assert_eq!(t["children"].as_array().unwrap().len(), 2);
    assert_eq!(json(&["decompose", "3: 1 2"])["type"], "unknot");
}

#[test]
fn normalized_with_and_without_override() {
    let r = json(&["normalized", "2: 1 1 1"]);
    assert_eq!(
        r["grid"]["h"],
        serde_json::json!([[0, 0, "2"], [0, 1, "1"], [1, 0, "1"]])
    );
    assert!(r["theorem"]
        .as_array()
        .unwrap()
        .iter()
        .all(|i| i["pass"] == true));
    let o = json(&[
        "normalized",
        "2: 1 1 1",
        "--profile-override",
        r#"{"genus":1,"s":1,"p":1}"#,
    ]);
    assert_eq!(o["grid"], r["grid"]);
    let bk = json(&["normalized", "baker_kegel"]);
    assert_eq!(bk["profile"]["genus"], 6);
    assert_eq!(bk["grid"]["nonnegative"], false);
}

#[test]
fn catalog_lists_rotation_classes() {
    let lines: Vec<String> = stdout(&["catalog", "--strands", "3", "--max-length", "2"])
        .lines()
        .map(str::to_owned)
        .collect();
    assert_eq!(
        lines,
        ["1:", "2:", "2: 1", "2: 1 1", "3:", "3: 1", "3: 1 1", "3: 1 2", "3: 2", "3: 2 2"]
    );
}

#[test]
fn verify_writes_report_and_exits_zero() {
    let dir = std::env::temp_dir().join(format!("braidpoly-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.jsonl");
    let out = run(&[
        "verify",
        "--strands",
        "3",
        "--max-length",
        "6",
        "--families",
        "all_positive_words,named_examples",
        "--jobs",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = std::fs::read_to_string(&path).unwrap();
    let keys: Vec<String> = text
        .lines()
        .map(|l| {
            serde_json::from_str::<Value>(l).unwrap()["key"]
                .as_str()
                .unwrap()
                .to_owned()
        })
        .collect();
    assert!(!keys.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("failures 0"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn bad_input_is_an_error() {
    assert!(!run(&["homfly", "3: 1 5"]).status.success());
    assert!(!run(&["homfly", "nonsense"]).status.success());
}

#[test]
fn node_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_braidpoly"))
        .args(["decompose", "4: 1 2 3 1 2 3 1 2 3"])
        .env("BRAIDPOLY_NODE_CAP", "1")
        .output()
        .unwrap();
    assert!(!out.status.success());
    assert!(
        String::from_utf8_lossy(&out.stderr).contains("exhausted"),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}
