use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use heckeform::Partition;
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_heckeform"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).env_remove("HECKE_THREADS").env_remove("HECKE_PRECISION_BITS").output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

fn testdata() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../testdata")
}

/// Compares against a stored file; `UPDATE_GOLDEN=1` rewrites it instead.
fn check_golden(path: &Path, got: &str) {
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(path, got).unwrap();
        return;
    }
    let want = std::fs::read_to_string(path).unwrap_or_else(|_| panic!("missing golden {}", path.display()));
    assert_eq!(got, want, "{}", path.display());
}

#[test]
fn gram_examples() {
    let j = json(&["gram", "--lambda", "2,1"]);
    assert_eq!(j["dim"], 2);
    assert_eq!(j["matrix"].as_array().unwrap().len(), 2);
    let j = json(&["gram", "--lambda", "2", "--c", "1/3", "--hermitian"]);
    assert_eq!(j["matrix"].as_array().unwrap().len(), 1);
    let j = json(&["gram", "--lambda", "1,1,1"]);
    assert_eq!(j["matrix"], serde_json::json!([[{"0": 1}]]));
    let j = json(&["gram", "--lambda", "1|1", "--c", "1/5", "--params", "0,1/2"]);
    assert_eq!(j["dim"], 2);
}

#[test]
fn unitary_examples() {
    let status = |l: &str, c: &str| json(&["unitary", "--lambda", l, "--c", c])["status"].as_str().unwrap().to_string();
    assert_eq!(status("3,1", "1/4"), "NonzeroUnitary");
    assert_ne!(status("3,1", "1/3"), "NonzeroUnitary");
    assert_eq!(status("1,1", "1/2"), "NonzeroUnitary");
    assert_eq!(status("3", "1/2"), "Zero");
    assert_eq!(status("2,1", "-1/3"), "NonzeroUnitary");
}

#[test]
fn jantzen_and_det_examples() {
    let j = json(&["jantzen", "--lambda", "3,1", "--c", "1/4"]);
    assert_eq!(j["layer_dims"], serde_json::json!([3, 2, 0]));
    let j = json(&["jantzen", "--lambda", "2,1", "--c", "1/5"]);
    assert_eq!(j["layer_dims"], serde_json::json!([2, 0]));
    let j = json(&["det", "--lambda", "2,1"]);
    assert_eq!(j["factors"], serde_json::json!([{"e": 3, "multiplicity": 1}]));
}

#[test]
fn locus_and_verify_exit_codes() {
    let j = json(&["locus", "--lambda", "2,2", "--bound", "12"]);
    assert_eq!(j["agreement"], true);
    let j = json(&["verify", "--n-max", "3"]);
    assert_eq!(j["agreement"], true);
    assert_eq!(j["shapes"], 5);
    // (4,1) at ±2/5 is unitary but outside the predicted locus
    let out = run(&["locus", "--lambda", "4,1", "--bound", "12"]);
    assert_eq!(out.status.code(), Some(1));
    let j: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(j["mismatches"], serde_json::json!(["-2/5", "2/5"]));
}

#[test]
fn usage_and_guard_exit_codes() {
    assert_eq!(run(&["unitary", "--lambda", "3,x", "--c", "1/3"]).status.code(), Some(2));
    assert_eq!(run(&["unitary", "--lambda", "3,1", "--c", "1/0"]).status.code(), Some(2));
    assert_eq!(run(&["unitary", "--lambda", "3,1"]).status.code(), Some(2));
    assert_eq!(run(&["locus", "--lambda", "3,1", "--bound", "6"]).status.code(), Some(2));
    assert_eq!(run(&["gram", "--lambda", "2,1", "--hermitian"]).status.code(), Some(2));
    assert_eq!(run(&["unitary", "--lambda", "5,4", "--c", "1/3"]).status.code(), Some(3));
    assert_eq!(run(&["verify", "--n-max", "9", "--bound", "30"]).status.code(), Some(3));
    let out = run(&["verify", "--n-max", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let a = stdout(&["locus", "--lambda", "3,2", "--threads", "1"]);
    let b = stdout(&["locus", "--lambda", "3,2", "--threads", "4"]);
    assert_eq!(a, b);
    let a = stdout(&["verify", "--n-max", "4", "--bound", "12", "--format", "csv", "--threads", "1"]);
    let b = stdout(&["verify", "--n-max", "4", "--bound", "12", "--format", "csv", "--threads", "3"]);
    assert_eq!(a, b);
    let c = stdout(&["unitary", "--lambda", "3,2", "--c", "2/9", "--precision-start-bits", "20"]);
    let d = stdout(&["unitary", "--lambda", "3,2", "--c", "2/9", "--precision-start-bits", "400"]);
    assert_eq!(c, d);
}

#[test]
fn csv_formats() {
    let s = stdout(&["unitary", "--lambda", "2,1", "--c", "1/3", "--format", "csv"]);
    let mut lines = s.lines();
    assert_eq!(lines.next(), Some("lambda,c,e,status,pos,neg,zero,dim_d"));
    assert!(lines.next().unwrap().starts_with("\"2,1\",1/3,3,NonzeroUnitary,"));
    let s = stdout(&["locus", "--lambda", "2,1", "--bound", "8", "--format", "csv"]);
    let mut lines = s.lines();
    assert_eq!(lines.next(), Some("lambda,c,status,pos,neg,zero,predicted"));
    assert!(lines.all(|l| l.starts_with("\"2,1\",")));
}

#[test]
fn dump_gram_writes_json() {
    let dir = std::env::temp_dir().join(format!("heckeform-dump-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g.json");
    let shown = stdout(&["gram", "--lambda", "2,2", "--format", "pretty", "--dump-gram", path.to_str().unwrap()]);
    assert!(shown.starts_with("λ = 2,2"));
    let dumped: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(dumped, json(&["gram", "--lambda", "2,2"]));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn symbolic_gram_goldens() {
    for n in 1..=5 {
        for p in Partition::all(n) {
            let l = p.to_string();
            let got = stdout(&["gram", "--lambda", &l]);
            check_golden(&testdata().join(format!("gram/{n}/{l}.json")), &got);
        }
    }
}

#[test]
fn command_goldens() {
    let cases: &[(&str, &[&str])] = &[
        ("unitary_3,1_1-4.json", &["unitary", "--lambda", "3,1", "--c", "1/4"]),
        ("unitary_3,1_1-3.json", &["unitary", "--lambda", "3,1", "--c", "1/3"]),
        ("hermitian_2,2_1-3.json", &["gram", "--lambda", "2,2", "--c", "1/3", "--hermitian"]),
        ("jantzen_3,1_1-4.json", &["jantzen", "--lambda", "3,1", "--c", "1/4"]),
        ("det_3,2,1.json", &["det", "--lambda", "3,2,1"]),
        ("locus_2,2_12.json", &["locus", "--lambda", "2,2", "--bound", "12"]),
        ("verify_4_12.txt", &["verify", "--n-max", "4", "--bound", "12", "--format", "pretty"]),
    ];
    for (name, args) in cases {
        check_golden(&testdata().join("golden").join(name), &stdout(args));
    }
}
