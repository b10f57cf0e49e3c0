use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g2sca")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixture(name: &str) -> String {
    std::fs::read_to_string(format!("{}/../core/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

/// First row of a fixture as bare tokens.
fn first_row(name: &str) -> String {
    fixture(name).lines().next().unwrap().split_once(": ").unwrap().1.to_string()
}

#[test]
fn enum_level_one_dot() {
    let o = run(&["enum", "--level", "1", "--format", "dot"]);
    assert!(o.status.success());
    let dot = stdout(&o);
    assert_eq!(dot.matches("[label=").count(), 15);
    assert_eq!(dot.matches(" -> ").count(), 20);
    assert!(dot.starts_with("digraph B1 {"));
}

#[test]
fn enum_json_is_deterministic() {
    let a = stdout(&run(&["enum", "--level", "2", "--format", "json"]));
    let b = stdout(&run(&["enum", "--level", "2", "--format", "json"]));
    assert_eq!(a, b);
    let doc: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(doc["nodes"].as_array().unwrap().len(), 92);
}

#[test]
fn enum_rejects_level_zero() {
    assert_eq!(run(&["enum", "--level", "0"]).status.code(), Some(2));
}

#[test]
fn r_both_algorithms_agree() {
    for algo in ["path", "insertion"] {
        let o = run(&["r", "--level", "4", "--lhs", "2 2_3 b2_1 . 0", "--algo", algo]);
        assert!(o.status.success());
        assert_eq!(stdout(&o).lines().next(), Some("2_1 . 1 b3 b3 b2"));
    }
}

#[test]
fn r_vacuum_is_fixed() {
    let o = run(&["r", "--level", "3", "--lhs", "1 1 1 . 1"]);
    assert_eq!(stdout(&o), "1 . 1 1 1\nH = 0\n");
}

#[test]
fn r_accepts_coordinates() {
    let o = run(&["r", "--level", "4", "--lhs", "(0,4/3,1/3,5/3,2/3,0) . 0"]);
    assert_eq!(stdout(&o).lines().next(), Some("2_1 . 1 b3 b3 b2"));
}

#[test]
fn r_rejects_non_members() {
    let o = run(&["r", "--level", "2", "--lhs", "(3,0,0,0,0,0) . 1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not an element"));
    assert_eq!(run(&["r", "--level", "2", "--lhs", "1 1 x"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn sca_reproduces_traces() {
    for (name, steps) in [("two_solitons.txt", "4"), ("three_solitons.txt", "8"), ("no_separation.txt", "7")] {
        let o = run(&["sca", "--carrier", "10", "--steps", steps, &first_row(name)]);
        assert!(o.status.success(), "{name}");
        assert_eq!(stdout(&o), fixture(name), "{name}");
    }
}

#[test]
fn sca_predict_verdicts() {
    let o = run(&["sca", "--carrier", "10", "--steps", "8", "--predict", &first_row("three_solitons.txt")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict: Agree"));
    let o = run(&["sca", "--carrier", "10", "--steps", "7", "--predict", &first_row("no_separation.txt")]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("verdict: NotSeparated"));
    assert!(out.contains("strictly decrease"));
}

#[test]
fn sca_json_document() {
    let o = run(&["sca", "--carrier", "10", "--steps", "4", "--format", "json", "--predict", &first_row("two_solitons.txt")]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["carrier"], 10);
    assert_eq!(doc["rows"].as_array().unwrap().len(), 5);
    assert_eq!(doc["energies"].as_array().unwrap().len(), 4);
    assert_eq!(doc["scattering"]["verdict"], "Agree");
    assert_eq!(doc["scattering"]["phase_shifts"], serde_json::json!([-3, 3]));
}

#[test]
fn sca_refuses_short_padding() {
    assert_eq!(run(&["sca", "--carrier", "10", "2 2 1"]).status.code(), Some(2));
}

#[test]
fn verify_suites() {
    let o = run(&["verify", "axioms", "--level", "3"]);
    assert!(o.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc[0]["pass"], true);
    assert!(run(&["verify", "ybe", "--level", "2"]).status.success());
    let o = run(&["verify", "all", "--level", "1", "--format", "text"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 5);
}
