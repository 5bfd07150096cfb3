//! End-to-end tests of the command-line binary: exit codes, output
//! contracts, and determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

use treemonoid::trees::{LabelledTree, RightStrictBst, TwinPair};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_treemonoid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

/// Writes `text` to a unique temp file and returns its path.
fn temp_file(name: &str, text: &str) -> PathBuf {
    let path =
        std::env::temp_dir().join(format!("treemonoid-cli-test-{}-{name}", std::process::id()));
    std::fs::write(&path, text).expect("temp file writes");
    path
}

#[test]
fn std_prints_the_standardization() {
    let output = run(&["std", "5 4 5 1 7 6 1 5 2 4"]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(stdout(&output), "6 4 7 1 10 9 2 8 3 5\n");
}

#[test]
fn equiv_answers_through_exit_codes() {
    let yes = run(&["equiv", "sylv", "insertion", "1 2 2 1", "2 1 2 1"]);
    assert_eq!(exit_code(&yes), 0);
    assert_eq!(stdout(&yes), "EQUIVALENT\n");

    let no = run(&["equiv", "sylv", "insertion", "1 2 1 2", "1 2 2 1"]);
    assert_eq!(exit_code(&no), 1);
    assert_eq!(stdout(&no), "NOT EQUIVALENT\n");

    let unsupported = run(&["equiv", "plac", "shape", "1", "1"]);
    assert_eq!(exit_code(&unsupported), 2);
}

#[test]
fn equiv_methods_agree_on_examples() {
    for method in ["insertion", "shape", "rewrite", "graph"] {
        let output = run(&["equiv", "sylv", method, "2 2 1 1", "2 1 2 1"]);
        assert_eq!(exit_code(&output), 0, "method {method}");
    }
}

#[test]
fn malformed_input_exits_2_with_one_diagnostic_line() {
    let output = run(&["std", "1 x 2"]);
    assert_eq!(exit_code(&output), 2);
    assert!(output.stdout.is_empty());
    let stderr = String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8");
    assert_eq!(stderr.lines().count(), 1);
    assert!(stderr.starts_with("error: "));
}

#[test]
fn unknown_kind_exits_2() {
    assert_eq!(exit_code(&run(&["insert", "nope", "1"])), 2);
    assert_eq!(exit_code(&run(&["class", "hypo", "1 2"])), 2);
    assert_eq!(exit_code(&run(&["insert", "hypo", "1 2"])), 2);
}

#[test]
fn op_prints_intermediates_and_halts_on_undefined() {
    let output = run(&["op", "f1;f1;e2;qf2", "2 1 1 1"]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(stdout(&output), "2 1 1 2\n2 1 2 2\nUNDEFINED\n");

    let bad = run(&["op", "g3", "1"]);
    assert_eq!(exit_code(&bad), 2);
}

#[test]
fn class_lists_the_sorted_closure() {
    let output = run(&["class", "sylv", "2 2 1 1"]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(stdout(&output), "1 2 2 1\n2 1 2 1\n2 2 1 1\n");
}

#[test]
fn graph_dot_contains_the_expected_edge() {
    let output = run(&["graph", "quasicrystal", "1 2 1 2", "--bound", "4", "--dot"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout(&output);
    assert!(text.starts_with("digraph component {\n"));
    assert!(text.contains("  \"1212\" -> \"1213\" [label=\"2\"];\n"));
    assert!(text.ends_with("}\n"));
}

#[test]
fn graph_runs_are_byte_identical() {
    let first = run(&["graph", "quasi", "1 2 1 2", "--bound", "6", "--dot"]);
    let second = run(&["graph", "quasi", "1 2 1 2", "--bound", "6", "--dot"]);
    assert_eq!(first.stdout, second.stdout);
    assert!(!first.stdout.is_empty());

    let selftest_a = run(&["selftest", "--size", "small"]);
    let selftest_b = run(&["selftest", "--size", "small"]);
    assert_eq!(selftest_a.stdout, selftest_b.stdout);
}

#[test]
fn insert_json_round_trips_under_the_tree_schema() {
    let sylv = run(&["insert", "sylv", "5 4 5 1 7 6 1 5 2 4", "--format", "json"]);
    assert_eq!(exit_code(&sylv), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&sylv)).expect("JSON parses");
    let p: RightStrictBst =
        serde_json::from_value(value["p"].clone()).expect("P re-parses as a right strict BST");
    let q: LabelledTree = serde_json::from_value(value["q"].clone()).expect("Q re-parses");
    assert_eq!(p.tree().size(), 10);
    assert_eq!(q.size(), 10);

    let baxt = run(&["insert", "baxt", "2 2 1 1", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&baxt)).expect("JSON parses");
    let pair: TwinPair =
        serde_json::from_value(value["p"].clone()).expect("P re-parses as a twin pair");
    assert_eq!(pair.size(), 4);
}

#[test]
fn count_verbs_evaluate_shape_files() {
    let leaf = temp_file("leaf.json", "{\"left\":null,\"right\":null}");
    let hooks = run(&["count", "hooks", leaf.to_str().unwrap()]);
    assert_eq!(exit_code(&hooks), 0);
    assert_eq!(stdout(&hooks), "1\n");

    let fillings = run(&["count", "fillings", leaf.to_str().unwrap(), "3"]);
    assert_eq!(stdout(&fillings), "3\n");

    let broken = temp_file("broken.json", "{");
    assert_eq!(
        exit_code(&run(&["count", "hooks", broken.to_str().unwrap()])),
        2
    );
}

#[test]
fn factorcount_counts_over_shape_files() {
    let leaf = temp_file("fc-leaf.json", "{\"left\":null,\"right\":null}");
    let output = run(&[
        "factorcount",
        "sylv",
        "1 1",
        leaf.to_str().unwrap(),
        leaf.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(stdout(&output), "1\n");

    let pair = temp_file(
        "fc-pair.json",
        "{\"left\":{\"left\":null,\"right\":null},\"right\":{\"left\":null,\"right\":null}}",
    );
    let baxt = run(&[
        "factorcount",
        "baxt",
        "2 1",
        pair.to_str().unwrap(),
        pair.to_str().unwrap(),
    ]);
    assert_eq!(stdout(&baxt), "1\n");

    assert_eq!(exit_code(&run(&["factorcount", "plac", "1", "x", "y"])), 2);
}

#[test]
fn readings_marks_the_left_consistent_word() {
    let insert = run(&["insert", "baxt", "2 2 1 1", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&insert)).expect("JSON parses");
    let pair = temp_file("readings-pair.json", &value["p"].to_string());

    let output = run(&["readings", pair.to_str().unwrap()]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(stdout(&output), "* 2 1 2 1\n  2 2 1 1\n");
}

#[test]
fn identity_decides_through_exit_codes() {
    let sylv = run(&["identity", "sylv", "--alphabet", "2", "--maxlen", "2"]);
    assert_eq!(exit_code(&sylv), 0);
    assert_eq!(stdout(&sylv), "HOLDS\n");

    let baxt = run(&["identity", "baxt", "--alphabet", "2", "--maxlen", "2"]);
    assert_eq!(exit_code(&baxt), 0);

    assert_eq!(exit_code(&run(&["identity", "plac"])), 2);
}

#[test]
fn selftest_small_passes() {
    let output = run(&["selftest", "--size", "small"]);
    assert_eq!(exit_code(&output), 0);
    let text = stdout(&output);
    assert_eq!(text.lines().count(), 10);
    for (idx, line) in text.lines().enumerate() {
        assert!(
            line.starts_with(&format!("criterion {} (", idx + 1)),
            "unexpected line: {line}"
        );
        assert!(line.contains("PASS"), "criterion failed: {line}");
    }

    assert_eq!(exit_code(&run(&["selftest", "--size", "huge"])), 2);
}
