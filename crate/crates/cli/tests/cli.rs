use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn skein(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skein"))
        .args(args)
        .output()
        .expect("run skein")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn records(o: &Output) -> Vec<Value> {
    stdout(o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn build(dir: &Path) -> std::path::PathBuf {
    let path = dir.join("g3.json");
    let o = skein(&[
        "build",
        "graded:3",
        "--field",
        "7",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    path
}

#[test]
fn validate_builder_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = build(dir.path());
    let o = skein(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("pass"));
}

#[test]
fn validate_truncated_file_is_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = build(dir.path());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::write(&path, &text[..text.len() / 2]).unwrap();
    let o = skein(&["validate", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line"));
}

#[test]
fn validate_perturbed_constant_is_axiom_failure() {
    let dir = tempfile::tempdir().unwrap();
    let path = build(dir.path());
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    v["compose"][1][6] = Value::String("2 mod 7".into());
    std::fs::write(&path, v.to_string()).unwrap();
    let o = skein(&["validate", path.to_str().unwrap(), "--format", "jsonl"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(records(&o)[0]["passed"], false);
}

#[test]
fn annulus_and_sphere_dimensions() {
    let o = skein(&[
        "skein",
        "graded-z3",
        "--field",
        "7",
        "--manifold",
        "annulus",
        "--format",
        "jsonl",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(records(&o)[0]["result"]["dim"], 3);
    let o = skein(&[
        "skein",
        "graded-z3",
        "--field",
        "7",
        "--manifold",
        "sphere",
        "--format",
        "jsonl",
    ]);
    assert_eq!(records(&o)[0]["result"]["dim"], 0);
}

#[test]
fn inadmissible_interval_is_rejected() {
    let o = skein(&[
        "skein",
        "exterior",
        "--field",
        "7",
        "--manifold",
        "interval(1,Pi1)",
        "--subcat-s",
        "proj",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("admissibility"));
}

#[test]
fn unknown_label_is_rejected() {
    let o = skein(&["skein", "graded:3", "--manifold", "disc", "--labels", "Y+"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn labelled_surface() {
    let o = skein(&[
        "skein",
        "graded:3",
        "--manifold",
        "surface(0,1,X1+ X2+)",
        "--format",
        "jsonl",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(records(&o)[0]["result"]["dim"], 1);
}

#[test]
fn exterior_right_mtrace() {
    let o = skein(&[
        "traces",
        "exterior",
        "--field",
        "7",
        "--subcat-s",
        "proj",
        "--format",
        "jsonl",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let r = &records(&o)[0];
    assert_eq!(r["mtraces"][0]["side"], "right");
    assert_eq!(r["mtraces"][0]["dim"], 1);
}

#[test]
fn closure_of_unit_is_everything() {
    let o = skein(&[
        "closure",
        "graded:3",
        "--subcat-s",
        "X0",
        "--format",
        "jsonl",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        records(&o)[0]["closure"],
        serde_json::json!(["X0", "X1", "X2"])
    );
}

#[test]
fn example59_passes() {
    let o = skein(&["example59", "--field", "7", "--format", "jsonl"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(records(&o)[0]["passed"], true);
}

#[test]
fn two_prime_agreement_and_determinism() {
    let args = [
        "skein",
        "graded-z3",
        "--two-prime",
        "7,13",
        "--manifold",
        "surface(1,0)",
    ];
    let (a, b) = (skein(&args), skein(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("agree"));
    let o = skein(&["skein", "/nonexistent.json", "--two-prime", "7,13"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn out_file_holds_records() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.jsonl");
    let o = skein(&["htr", "graded:2", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(out).unwrap();
    assert_eq!(text.lines().count(), 4);
}
