//! End-to-end runs of the `taucot` binary: exit codes and output stability.

use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_taucot")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn verify_all_on_example_passes() {
    let out = run(&["verify-all", "--algebra", &fixture("a3_rel")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["checks"].as_array().unwrap().iter().filter(|c| c["pass"] == false).count(), 0);
}

#[test]
fn stt_on_one_vertex_has_two_entries() {
    let out = run(&["stt", "--algebra", &fixture("k")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["count"], 2);
}

#[test]
fn corrupted_lw_list_fails_with_named_check() {
    let out = run(&["verify-lw", "P_3,P_2,P_1", "P_2,P_1,S_2", "--algebra", &fixture("a3_rel")]);
    assert_eq!(out.status.code(), Some(1));
    let failing: Vec<String> =
        json(&out)["checks"].as_array().unwrap().iter().filter(|c| c["pass"] == false).map(|c| c["name"].as_str().unwrap().to_string()).collect();
    assert!(!failing.is_empty());
}

#[test]
fn valid_lw_pair_passes() {
    let out = run(&["verify-lw", "P_3,P_2,P_1,S_2", "P_2,P_1,S_2,S_1", "--algebra", &fixture("a3_rel")]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(run(&["tau", "Q_7", "--algebra", &fixture("a3_rel")]).status.code(), Some(2));
    assert_eq!(run(&["stt", "--algebra", "/nonexistent.json"]).status.code(), Some(2));
    assert_eq!(run(&["stt"]).status.code(), Some(2));
}

#[test]
fn guard_abort_exits_three() {
    assert_eq!(run(&["silting", "--algebra", &fixture("a3"), "--guard", "10"]).status.code(), Some(3));
}

#[test]
fn non_silting_object_is_a_verification_failure() {
    let out = run(&["bb", "P(P_1),P_1[1]", "--algebra", &fixture("a3_rel")]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn output_is_byte_identical_and_written_to_out() {
    let dir = std::env::temp_dir().join(format!("taucot-cli-{}", std::process::id()));
    let args = ["verify-cotorsion", "P(P_1),P(P_2),P(S_2)", "--algebra", &fixture("a3_rel"), "--seed", "3"];
    let a = run(&args);
    let mut with_out = args.to_vec();
    let d = dir.to_string_lossy().to_string();
    with_out.extend(["--out", &d]);
    let b = run(&with_out);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(std::fs::read(dir.join("verify-cotorsion.json")).unwrap(), a.stdout);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn dot_export_has_one_node_per_support_tau_tilting_module() {
    let out = run(&["export-dot", "--algebra", &fixture("a2")]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("digraph"));
    assert_eq!(text.matches("[label=").count(), 5);
    assert_eq!(text.matches("->").count(), 5);
}
