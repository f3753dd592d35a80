//! End-to-end CLI checks: exit-code contract, certificate output, and the
//! set-file pipeline between build and verify.

use std::process::{Command, Output};

use avoidset::cert::CertificateFile;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_avoidset"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn search_r_set_exits_zero_and_emits_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let cert_path = dir.path().join("cert.json");
    let out = run(&[
        "search", "--m", "5", "--k", "2", "--mode", "r-set",
        "--out", cert_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let cert = CertificateFile::read(&cert_path).unwrap();
    assert_eq!(cert.elements.as_ref().map(|e| e.len()), Some(2));
    assert_eq!(cert.schema_version, "1");
}

#[test]
fn search_budget_exhaustion_exits_two() {
    // A zero-second budget cannot prove optimality on a nontrivial graph.
    let out = run(&[
        "search", "--m", "101", "--k", "2", "--mode", "r-set", "--budget-secs", "0",
    ]);
    assert_eq!(code(&out), 2, "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(code(&run(&["search", "--m", "5"])), 64); // missing --k
    assert_eq!(code(&run(&["no-such-command"])), 64);
    assert_eq!(code(&run(&["search", "--m", "0", "--k", "2"])), 64); // invalid modulus
}

#[test]
fn help_exits_zero() {
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn build_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let set_path = dir.path().join("a.set");
    let out = run(&[
        "build", "--variant", "multivariate", "--m", "3", "--k", "2",
        "--rp", "0,3,6", "--y", "6", "--out", set_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let out = run(&[
        "verify", "--set", set_path.to_str().unwrap(), "--target", "two-squares",
        "--n", "531441",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let cert = CertificateFile::from_json(&String::from_utf8_lossy(&out.stdout)).unwrap();
    assert!(matches!(
        cert.verdict,
        Some(avoidset::verify::Verdict::VerifiedExhaustive)
    ));
}

#[test]
fn verify_refutation_exits_one_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let set_path = dir.path().join("bad.set");
    avoidset::cert::write_set_file(&set_path, "hand-written", &[1, 2]).unwrap();
    let out = run(&[
        "verify", "--set", set_path.to_str().unwrap(), "--target", "list",
        "--values", "1",
    ]);
    assert_eq!(code(&out), 1);
    let cert = CertificateFile::from_json(&String::from_utf8_lossy(&out.stdout)).unwrap();
    assert!(matches!(
        cert.verdict,
        Some(avoidset::verify::Verdict::Refuted { .. })
    ));
}

#[test]
fn verify_sampled_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let set_path = dir.path().join("g.set");
    avoidset::cert::write_set_file(&set_path, "greedy", &[1, 3, 6, 8]).unwrap();
    let out = run(&[
        "verify", "--set", set_path.to_str().unwrap(), "--target", "list",
        "--values", "1,4,9", "--sample",
    ]);
    assert_eq!(code(&out), 2, "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn parse_errors_exit_65() {
    let dir = tempfile::tempdir().unwrap();
    let set_path = dir.path().join("garbled.set");
    std::fs::write(&set_path, "# header\nnot-a-number\n").unwrap();
    let out = run(&[
        "verify", "--set", set_path.to_str().unwrap(), "--target", "two-squares",
    ]);
    assert_eq!(code(&out), 65);

    let missing = dir.path().join("missing.set");
    let out = run(&["verify", "--set", missing.to_str().unwrap(), "--target", "two-squares"]);
    assert_eq!(code(&out), 65);
}

#[test]
fn build_hypothesis_failure_names_the_condition() {
    let dir = tempfile::tempdir().unwrap();
    let set_path = dir.path().join("x.set");
    // R = {0,1} differs by 1 = 1^2, violating the witness condition.
    let out = run(&[
        "build", "--variant", "inhom", "--m", "5", "--f", "x^2+5x^3",
        "--r", "0,1", "--y", "9", "--out", set_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 64);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("power"), "stderr: {err}");
}

#[test]
fn dimacs_export_writes_parseable_graph() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.col");
    let out = run(&[
        "search", "--m", "13", "--k", "2", "--mode", "r-set",
        "--dimacs", path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let text = std::fs::read_to_string(&path).unwrap();
    let g = avoidset::search::Graph::from_dimacs(&text).unwrap();
    assert_eq!(g.n(), 13);
}

#[test]
fn exponent_command_prints_value() {
    let out = run(&[
        "exponent", "chain", "--m", "65", "--k", "2", "--pre", "65", "--period", "7,17",
    ]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("0.768504"));
}
