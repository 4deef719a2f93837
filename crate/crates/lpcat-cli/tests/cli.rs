//! End-to-end checks of the compiled `lpcat` binary: argument wiring, output
//! shapes and exit codes.

use std::path::Path;
use std::process::{Command, Output};

fn lpcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lpcat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn check_valid_and_invalid() {
    let out = lpcat(&["check", "-A -> (A -> B)"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "A-INVALID  model: A=* B=0\n");

    let out = lpcat(&["check", "A | -A"]);
    assert_eq!(stdout(&out), "A-VALID\n");

    let out = lpcat(&["check", "#A -> (-A -> (A -> B))"]);
    assert_eq!(stdout(&out), "A-VALID\n");
}

#[test]
fn check_flags() {
    let out = lpcat(&["check", "--fail-on-invalid", "-A -> (A -> B)"]);
    assert_eq!(out.status.code(), Some(3));

    let out = lpcat(&["check", "--oracle", "--trace", "A -> (~A -> B)"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("A-VALID"));
    assert!(text.contains("oracle: T-VALID (agrees)"));
    assert!(text.contains("1. RR"));

    let out = lpcat(&["check", "A & (B |"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("syntax error"));
}

#[test]
fn check_json_document() {
    let out = lpcat(&["check", "--format", "json", "--trace", "-A -> (A -> B)"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["verdict"], "A-INVALID");
    assert_eq!(doc["model"]["A"], "*");
    assert_eq!(doc["model"]["B"], "0");
    assert_eq!(doc["root"], 0);
    let nodes = doc["nodes"].as_array().unwrap();
    assert_eq!(nodes.len(), 6);
    assert_eq!(nodes[0]["mark"], "0");
    assert!(doc["trace"].as_array().unwrap().len() >= 3);
}

#[test]
fn table_matches_the_weak_negation_column() {
    let out = lpcat(&["table", "-p"]);
    assert_eq!(stdout(&out), "p | -p\n1 | 0\n* | 1 +\n0 | 1 +\n");
}

#[test]
fn tree_renders_with_model() {
    let out = lpcat(&[
        "tree",
        "-A -> (A -> B)",
        "--model",
        "A=*,B=0",
        "--format",
        "ascii",
    ]);
    let text = stdout(&out);
    assert!(text.starts_with("-> [0]\n"), "got: {text}");

    let out = lpcat(&["tree", "#A", "--model", "A=*", "--format", "dot"]);
    assert!(stdout(&out).contains("shape=box"));

    let out = lpcat(&["tree", "p", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["nodes"].as_array().unwrap().len(), 1);
}

#[test]
fn corpus_bundled_file_passes() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus/classic.corpus");
    let out = lpcat(&["corpus", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).ends_with("13/13 passed\n"), "{}", stdout(&out));
}

#[test]
fn compare_depth_zero_space() {
    // the space is the two bare atoms; both are refutable and the routes
    // agree on that
    let out = lpcat(&["compare", "--max-depth", "0", "--atom-count", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("checked 2 formulas"));
    assert!(text.contains("disagreements: 0"));

    let check = lpcat(&["check", "p"]);
    assert_eq!(stdout(&check), "A-INVALID  model: p=0\n");
}

#[test]
fn compare_seeded_random_run() {
    let out = lpcat(&[
        "compare",
        "--max-depth",
        "4",
        "--atom-count",
        "3",
        "--random",
        "300",
        "--seed",
        "7",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("random: 300 samples"));
    assert!(text.contains("disagreements: 0"));

    // deterministic for a fixed seed
    let again = lpcat(&[
        "compare",
        "--max-depth",
        "4",
        "--atom-count",
        "3",
        "--random",
        "300",
        "--seed",
        "7",
    ]);
    assert_eq!(stdout(&out), stdout(&again));
}
