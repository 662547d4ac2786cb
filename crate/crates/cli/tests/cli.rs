use std::process::{Command, Output};

use m2chow::pipeline::{check_ids, CheckRecord};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_m2chow"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn verify_all_as_json() {
    let o = run(&["verify", "--all", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let records: Vec<CheckRecord> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(records.len(), check_ids().len());
    let again = serde_json::to_string(&records).unwrap();
    assert_eq!(serde_json::from_str::<Vec<CheckRecord>>(&again).unwrap(), records);
}

#[test]
fn verify_one_check() {
    let o = run(&["verify", "--check", "thm:main", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let records: Vec<CheckRecord> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(records.len(), 1);
    assert_eq!(records[0].id, "thm:main");
}

#[test]
fn text_report() {
    let o = run(&["verify", "--check", "groth", "kappa"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("2 of 2 checks passed"));
}

#[test]
fn unknown_id_exits_2_and_lists_ids() {
    let o = run(&["verify", "--check", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("thm:bg") && err.contains("oracle-agreement"));
    assert_eq!(run(&["explain", "bogus"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["verify", "--max-degree", "4"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn explain_shows_presentations() {
    let o = run(&["explain", "thm:bg"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("2*gamma"));
    assert!(stdout(&o).contains("gamma^2 + beta1*gamma"));

    let o = run(&["explain", "det-7x7"]);
    assert!(stdout(&o).contains("86400*(lambda1^2 - 4*lambda2)^3"));

    let o = run(&["explain", "adelta1"]);
    let text = stdout(&o);
    assert!(text.contains("depends on: thm:bg, pushbg"), "{text}");
    for r in ["2*gamma", "gamma^2 + lambda1*gamma", "24*lambda1^2 - 48*lambda2", "24*lambda1*lambda2"] {
        assert!(text.contains(r), "{r}");
    }
}

#[test]
fn list_checks() {
    let o = run(&["list-checks"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), check_ids().len());
}
