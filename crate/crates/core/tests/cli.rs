//! End-to-end checks of the command-line interface: exact bytes, exit
//! codes, and determinism.

use std::process::{Command, Output};

fn xbifix(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_xbifix"))
        .args(args)
        .output()
        .expect("failed to run the CLI")
}

fn stdout_of(args: &[&str]) -> String {
    let output = xbifix(args);
    assert!(
        output.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    String::from_utf8(output.stdout).unwrap()
}

#[test]
fn gen_codeword_list() {
    let out = stdout_of(&["gen", "--list", "s", "--n", "8", "--q", "2", "--k", "3"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 7);
    assert_eq!(lines[0], "00011001");
    assert_eq!(lines[6], "00010011");
}

#[test]
fn gen_reflected_list() {
    let out = stdout_of(&["gen", "--list", "g", "--n", "3", "--q", "3"]);
    assert_eq!(
        out,
        "111\n112\n122\n121\n221\n222\n212\n211\n"
    );
}

#[test]
fn gen_expansion() {
    let out = stdout_of(&[
        "gen", "--list", "expansion", "--trace", "01011", "--q", "3",
    ]);
    assert_eq!(
        out,
        "01011\n01012\n01022\n01021\n02021\n02022\n02012\n02011\n"
    );
}

#[test]
fn empty_word_renders_as_an_empty_line() {
    let out = stdout_of(&["gen", "--list", "f", "--n", "0", "--k", "2"]);
    assert_eq!(out, "\n");
    let streamed = stdout_of(&["gen", "--list", "f", "--n", "0", "--k", "2", "--stream"]);
    assert_eq!(streamed, "\n");
    let gray = stdout_of(&["gen", "--list", "g", "--n", "0", "--q", "4", "--stream"]);
    assert_eq!(gray, "\n");
}

#[test]
fn csv_format() {
    let out = stdout_of(&[
        "gen", "--list", "g", "--n", "2", "--q", "3", "--format", "csv",
    ]);
    assert_eq!(out, "1,1\n1,2\n2,2\n2,1\n");
}

#[test]
fn digits_format_rejects_wide_alphabets() {
    let output = xbifix(&["gen", "--list", "g", "--n", "2", "--q", "12"]);
    assert_eq!(output.status.code(), Some(2));
    let ok = xbifix(&[
        "gen", "--list", "g", "--n", "2", "--q", "12", "--format", "csv",
    ]);
    assert!(ok.status.success());
}

#[test]
fn count_values() {
    assert_eq!(stdout_of(&["count", "--n", "8", "--q", "2", "--k", "3"]), "7\n");
    assert_eq!(stdout_of(&["count", "--n", "8", "--q", "3", "--k", "3"]), "104\n");
    assert_eq!(stdout_of(&["count", "--n", "5", "--q", "4", "--k", "3"]), "9\n");
    // counting is exact beyond any materializable size
    let big = stdout_of(&["count", "--n", "300", "--q", "3", "--k", "2"]);
    assert!(big.trim().len() > 50);
}

#[test]
fn verify_passes_on_good_points() {
    for (n, q, k) in [("8", "3", "3"), ("8", "2", "3"), ("7", "2", "5")] {
        let out = xbifix(&["verify", "--n", n, "--q", q, "--k", k]);
        assert!(out.status.success(), "verify {n} {q} {k}");
        let text = String::from_utf8(out.stdout).unwrap();
        assert_eq!(text.matches(": PASS").count(), 4, "{text}");
        assert!(!text.contains("FAIL"));
    }
}

#[test]
fn verify_with_parallel_scan_matches() {
    let sequential = stdout_of(&["verify", "--n", "8", "--q", "3", "--k", "3"]);
    let parallel = stdout_of(&["verify", "--n", "8", "--q", "3", "--k", "3", "--parallel"]);
    assert_eq!(sequential, parallel);
}

#[test]
fn usage_errors_exit_2() {
    // k = 1 has no ordered list
    let out = xbifix(&["gen", "--list", "s", "--n", "8", "--q", "3", "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    // n < k + 2
    let out = xbifix(&["count", "--n", "4", "--q", "1", "--k", "3"]);
    assert_eq!(out.status.code(), Some(2));
    // missing required flag for the chosen list
    let out = xbifix(&["gen", "--list", "s", "--n", "8", "--q", "3"]);
    assert_eq!(out.status.code(), Some(2));
    // unknown flag (handled by the argument parser)
    let out = xbifix(&["gen", "--list", "s", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn capacity_errors_exit_3() {
    let out = xbifix(&[
        "gen", "--list", "g", "--n", "9", "--q", "5", "--cap", "1000",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let out = xbifix(&["verify", "--n", "30", "--q", "3", "--k", "2"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn bench_odometer_table() {
    let out = stdout_of(&["bench", "--target", "gen_tuple", "--q", "3", "--sweep", "1..5"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 6); // header + 5 rows
    assert!(lines[0].contains("expected"));
    for row in &lines[1..] {
        assert!(
            row.ends_with("EXACT") || row.ends_with("MISMATCH"),
            "unmarked row: {row}"
        );
    }
}

#[test]
fn bench_stream_table() {
    let out = stdout_of(&[
        "bench", "--target", "stream_s", "--q", "3", "--k", "2", "--sweep", "8,10,12",
    ]);
    assert_eq!(out.lines().count(), 4);
    let out = stdout_of(&[
        "bench", "--target", "gen_fib", "--k", "2", "--sweep", "5..8",
    ]);
    assert_eq!(out.lines().count(), 5);
    let missing = xbifix(&["bench", "--target", "stream_s", "--q", "3", "--sweep", "8"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["gen", "--list", "s", "--n", "10", "--q", "3", "--k", "2"];
    assert_eq!(stdout_of(&args), stdout_of(&args));
}
