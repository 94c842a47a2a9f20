use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stability-kit")).args(args).output().unwrap()
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

// x² + y², roots ±i
const SQUARES: &str = r#"{"degree":[2],"terms":[{"mu":[2],"re":"1"},{"mu":[0],"re":"1"}]}"#;

#[test]
fn suite_report_goes_to_file_and_replays() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = run(&["suite", "symbol-lemma", "--seed", "3", "--cases", "8", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["cases"], 8);

    let replay = run(&["replay", path.to_str().unwrap()]);
    assert_eq!(replay.status.code(), Some(0));
    assert_eq!(stdout_json(&replay), Value::Array(vec![]));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["suite", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["stable", "{not json", "--region", "H+"]).status.code(), Some(2));
    assert_eq!(run(&["stable", SQUARES, "--region", "H+*"]).status.code(), Some(2));
}

#[test]
fn stable_reports_a_verdict() {
    let upper = run(&["stable", SQUARES, "--region", "H+"]);
    assert_eq!(upper.status.code(), Some(0));
    assert_eq!(stdout_json(&upper)["status"], "UNSTABLE");
    // ±i sit on the unit circle, outside the open disk
    let disk = run(&["stable", SQUARES, "--region", "disk"]);
    assert_eq!(disk.status.code(), Some(0));
    assert_eq!(stdout_json(&disk)["status"], "STABLE");
}

#[test]
fn apolar_pairs_from_stdin_and_inline() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_stability-kit"))
        .args(["apolar", "-", SQUARES])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    use std::io::Write;
    child.stdin.take().unwrap().write_all(SQUARES.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert!(v["value"]["re"].is_string());
}
