use std::path::PathBuf;
use std::process::{Command, Output};

use phirep::automata::{builtin, Dfa};
use phirep::classify::Summary;
use phirep::verifier::Report;

fn phirep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_phirep"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = phirep(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    phirep(args).status.code().expect("exited normally")
}

fn reprint(json: &str) -> String {
    let value: serde_json::Value = serde_json::from_str(json).unwrap();
    format!("{value}\n")
}

#[test]
fn convert_outputs() {
    assert_eq!(stdout(&["convert", "5"]), "1000.1001\n");
    assert_eq!(stdout(&["convert", "0"]), "0\n");
    assert_eq!(stdout(&["convert", "25"]), "1010000.000101\n");
    assert_eq!(
        stdout(&["convert", "9", "--format", "json"]),
        "{\"exponents\":[4,1,-2,-4],\"n\":\"9\",\"string\":\"10010.0101\"}\n"
    );
    // arbitrary size input
    let big = stdout(&["convert", "100000000000000000000000000000"]);
    assert!(big.contains('.'));
}

#[test]
fn zeckendorf_both_ways() {
    assert_eq!(stdout(&["zeck", "11"]), "10100\n");
    assert_eq!(stdout(&["zeck", "--zeck", "10100"]), "11\n");
    assert_eq!(stdout(&["convert", "--zeck", "1000"]), "1000.1001\n");
    assert_eq!(code(&["zeck", "--zeck", "0110"]), 2);
}

#[test]
fn classify_nine() {
    let text = stdout(&["classify", "9"]);
    assert!(text.contains("not in S"), "{text}");
    assert!(text.contains("double: 53-2φ (= 52-√5)"), "{text}");
    assert!(text.contains("odd exponents: 1 [1]"), "{text}");
    let json = stdout(&["classify", "9", "--format", "json"]);
    let s: Summary = serde_json::from_str(&json).unwrap();
    assert!(!s.antipalindromic);
    assert_eq!(s.parity.odd_exponents, vec![1]);
}

#[test]
fn shevelev_sequence() {
    let out = stdout(&["sequence", "shevelev", "--limit", "47"]);
    let terms: Vec<u64> = out.lines().map(|l| l.parse().unwrap()).collect();
    assert_eq!(terms, [1, 3, 4, 7, 8, 10, 11, 18, 19, 21, 22, 25, 26, 28, 29, 47]);
    let json = stdout(&["sequence", "one-odd", "--limit", "200", "--format", "json"]);
    let v: Vec<u64> = serde_json::from_str(&json).unwrap();
    assert_eq!(v.last(), Some(&197));
}

#[test]
fn json_outputs_reprint_identically() {
    let cases: &[&[&str]] = &[
        &["convert", "25", "--format", "json"],
        &["zeck", "100", "--format", "json"],
        &["classify", "20", "--format", "json"],
        &["sequence", "one_even", "--limit", "80", "--format", "json"],
        &["verify", "one-even", "two-odd", "--max", "2000", "--format", "json"],
        &["dfa", "builtin", "fibluc", "--format", "json"],
        &["dfa", "builtin", "--format", "json"],
        &["dfa", "equiv", "end1", "regex:(0|1)*0", "--format", "json"],
    ];
    for args in cases {
        let out = phirep(args);
        let text = String::from_utf8(out.stdout).unwrap();
        assert_eq!(reprint(&text), text, "{args:?}");
    }
}

#[test]
fn verify_reports() {
    let json = stdout(&["verify", "all", "--max", "3000", "--length", "6", "--depth", "14", "--margin", "2", "--format", "json"]);
    let reports: Vec<Report> = serde_json::from_str(&json).unwrap();
    assert_eq!(reports.len(), 8);
    assert!(reports.iter().all(|r| r.passed));
    // same bytes whatever the worker count
    let one = stdout(&["verify", "kimberling", "one-odd", "--max", "5000", "--jobs", "1", "--format", "json"]);
    let two = stdout(&["verify", "kimberling", "one-odd", "--max", "5000", "--jobs", "2", "--format", "json"]);
    assert_eq!(one, two);
    let text = stdout(&["verify", "lucas-greedy", "--max", "500"]);
    assert!(text.starts_with("PASS lucas_greedy [0, 500]"), "{text}");
}

#[test]
fn dfa_operations() {
    let and = stdout(&["dfa", "product", "and", "noodd1", "oneeven1", "--format", "json"]);
    let dfa = Dfa::from_json(&and).unwrap();
    assert!(dfa.accepts_str("10").unwrap());
    assert!(!dfa.accepts_str("01").unwrap());

    let dot = stdout(&["dfa", "complement", "builtin:end1", "--format", "dot"]);
    assert!(dot.starts_with("digraph"));

    let projected = stdout(&["dfa", "project", "shiftr", "--track", "1", "--format", "json"]);
    let universal = stdout(&["dfa", "compile", "(0|1)*", "--format", "json"]);
    assert_eq!(projected, universal);

    assert_eq!(stdout(&["dfa", "run", "fibluc", "10000", "101000"]), "accept\n");
    assert_eq!(stdout(&["dfa", "run", "end1", "10"]), "reject\n");
    assert_eq!(stdout(&["dfa", "equiv", "end1", "regex:(0|1)*1"]), "equivalent\n");

    let minimized = stdout(&["dfa", "minimize", "regex:(0|1)*1|1", "--format", "json"]);
    assert_eq!(Dfa::from_json(&minimized).unwrap(), builtin("end1").unwrap());
}

#[test]
fn dfa_from_file() {
    let path: PathBuf = std::env::temp_dir().join(format!("phirep-cli-{}.json", std::process::id()));
    std::fs::write(&path, builtin("largesteven").unwrap().to_json()).unwrap();
    let operand = format!("file:{}", path.display());
    assert_eq!(stdout(&["dfa", "equiv", &operand, "largesteven"]), "equivalent\n");
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn synthesis() {
    let json = stdout(&["dfa", "synthesize", "one_even", "--depth", "14", "--margin", "3", "--format", "json"]);
    let dfa = Dfa::from_json(&json).unwrap();
    assert_eq!(dfa.num_states(), 16);
    let word = |n: u64| phirep::zeck::zeck_encode(n).to_string();
    assert!(dfa.accepts_str(&word(77)).unwrap());
    assert!(dfa.accepts_str(&word(78)).unwrap());
    assert!(!dfa.accepts_str(&word(7)).unwrap());
}

#[test]
fn exit_code_matrix() {
    // success
    assert_eq!(code(&["convert", "5"]), 0);
    assert_eq!(code(&["dfa", "builtin"]), 0);
    assert_eq!(code(&["verify", "min-exponent", "--max", "100"]), 0);
    // verification failures
    assert_eq!(code(&["dfa", "equiv", "end1", "noodd1"]), 1);
    assert_eq!(code(&["dfa", "synthesize", "one_odd", "--depth", "12", "--margin", "3"]), 1);
    // usage errors
    assert_eq!(code(&[]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["convert"]), 2);
    assert_eq!(code(&["convert", "abc"]), 2);
    assert_eq!(code(&["convert", "--", "-3"]), 2);
    assert_eq!(code(&["convert", "5", "--format", "dot"]), 2);
    assert_eq!(code(&["convert", "5", "--zeck", "100"]), 2);
    assert_eq!(code(&["classify", "0"]), 2);
    assert_eq!(code(&["sequence", "primes"]), 2);
    assert_eq!(code(&["verify", "fermat"]), 2);
    assert_eq!(code(&["verify", "figures", "--depth", "3"]), 2);
    assert_eq!(code(&["dfa", "compile", "(0|"]), 2);
    assert_eq!(code(&["dfa", "product", "xor", "end1", "end1"]), 2);
    assert_eq!(code(&["dfa", "product", "and", "end1", "shiftl"]), 2);
    assert_eq!(code(&["dfa", "project", "end1", "--track", "3"]), 2);
    assert_eq!(code(&["dfa", "run", "end1", "012"]), 2);
}
