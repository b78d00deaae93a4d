use std::path::PathBuf;
use std::process::{Command, Output};

fn gtslab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gtslab")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_doc(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gtslab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

const SIERPINSKI: &str = r#"
[[carrier]]
name = "X"
atoms = ["a", "b"]

[[gts]]
name = "S"
kind = "topological"
carrier = "X"
opens = ["{}", "{a}", "{a,b}"]
"#;

const MISSING_EMPTY: &str = r#"
[[carrier]]
name = "X"
atoms = ["a", "b"]

[[gts]]
name = "E"
kind = "explicit"
carrier = "X"
families = [["{a}"]]
"#;

#[test]
fn check_exit_codes() {
    let good = write_doc("good.toml", SIERPINSKI);
    let bad = write_doc("bad.toml", MISSING_EMPTY);
    let broken = write_doc("broken.toml", "not [ toml");
    assert_eq!(code(&gtslab(&["check", good.to_str().unwrap()])), 0);
    let rejected = gtslab(&["check", bad.to_str().unwrap()]);
    assert_eq!(code(&rejected), 1);
    assert!(stdout(&rejected).contains("empty set"));
    assert_eq!(code(&gtslab(&["check", broken.to_str().unwrap()])), 2);
    assert_eq!(code(&gtslab(&["check", "/nonexistent/doc.toml"])), 2);
}

#[test]
fn usage_errors() {
    assert_eq!(code(&gtslab(&["frobnicate"])), 2);
    assert_eq!(code(&gtslab(&["--backend", "cloud", "enumerate", "--size", "2"])), 2);
    assert_eq!(code(&gtslab(&["--max-size", "2", "enumerate", "--size", "3"])), 2);
    assert_eq!(code(&gtslab(&["verify", "no-such-suite"])), 2);
    assert_eq!(code(&gtslab(&["--help"])), 0);
}

#[test]
fn enumerate_counts_rings() {
    let o = gtslab(&["--format", "machine", "enumerate", "--size", "3"]);
    assert_eq!(code(&o), 0);
    let last = stdout(&o).lines().last().unwrap().to_string();
    let v: serde_json::Value = serde_json::from_str(&last).unwrap();
    assert_eq!(v["kind"], "count");
    assert_eq!(v["rings"], 29);
}

#[test]
fn verify_passes_and_reports_faults() {
    assert_eq!(code(&gtslab(&["--max-size", "3", "verify", "prop-5.12"])), 0);
    let o = gtslab(&["--format", "machine", "--max-size", "2", "verify", "prop-1.8", "--inject-fault"]);
    assert_eq!(code(&o), 1);
    let text = stdout(&o);
    let cex = text
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap())
        .find(|v| v["kind"] == "counterexample")
        .expect("a counterexample record");
    assert!(cex["document"].as_str().is_some_and(|d| d.contains("[[carrier]]")), "{cex}");
}

#[test]
fn machine_output_ignores_job_count() {
    let run = |jobs: &str| stdout(&gtslab(&["--format", "machine", "--jobs", jobs, "--max-size", "3", "verify", "all"]));
    let one = run("1");
    assert!(!one.is_empty());
    assert_eq!(one, run("4"));
}

#[test]
fn wallman_and_compactify() {
    let good = write_doc("wallman.toml", SIERPINSKI);
    let o = gtslab(&["--format", "machine", "wallman", "S", "--file", good.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).lines().next().unwrap()).unwrap();
    assert_eq!(v["total"], false);
    assert_eq!(code(&gtslab(&["wallman", "rom-line"])), 0);
    assert_eq!(code(&gtslab(&["compactify", "alexandroff", "rom-line"])), 0);
}

#[test]
fn export_dot_outputs() {
    let q = gtslab(&["export-dot", "quotient:RomClosed"]);
    assert_eq!(code(&q), 0);
    assert!(stdout(&q).starts_with("digraph"));
    let good = write_doc("dot.toml", SIERPINSKI);
    let s = gtslab(&["export-dot", "S", "--file", good.to_str().unwrap(), "--order", "specialization"]);
    assert_eq!(code(&s), 0);
    assert!(stdout(&s).contains("p1 -> p0"));
}
