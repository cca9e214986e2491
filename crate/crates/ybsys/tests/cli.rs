//! End-to-end tests of the `ybsys` binary: exit-code contract, report
//! shapes, determinism, and file round trips.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ybsys"))
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn verify_solution_exits_zero() {
    let out = run(&["verify", data("pair_h02_flip.ybm").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("verdict: solution"));
    assert!(text.matches("residual zero").count() == 4);
}

#[test]
fn verify_symbolic_pair_exits_zero() {
    let out = run(&["verify", data("pair_h12s_sym.ybm").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("verdict: solution"));
}

#[test]
fn verify_mod_p_exits_zero() {
    let out = run(&[
        "verify",
        data("pair_h02_flip.ybm").to_str().unwrap(),
        "--prime",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
}

#[test]
fn verify_non_solution_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.ybm");
    let text = std::fs::read_to_string(data("pair_h02_flip.ybm"))
        .unwrap()
        .replace(
            "\"1\" \"0\" \"0\" \"0\"\n\"0\" \"0\" \"1\" \"0\"\n\"0\" \"1\" \"0\" \"0\"\n\"0\" \"0\" \"0\" \"1\"",
            "\"1\" \"0\" \"0\" \"0\"\n\"0\" \"1\" \"0\" \"0\"\n\"0\" \"0\" \"1\" \"0\"\n\"0\" \"0\" \"0\" \"1\"",
        );
    std::fs::write(&path, text).unwrap();
    let out = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("verdict: not a solution"));
    assert!(text.contains("residual nonzero at"));
}

#[test]
fn malformed_entry_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("syntax.ybm");
    let text = std::fs::read_to_string(data("pair_h02_flip.ybm"))
        .unwrap()
        .replace("\"-1\" \"0\" \"0\" \"1\"", "\"1+*t\" \"0\" \"0\" \"1\"");
    std::fs::write(&path, text).unwrap();
    let out = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("error"));
}

#[test]
fn nullspace_dimensions_across_fields() {
    let out = run(&["nullspace", data("r_h02.ybm").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("kernel dimension: 2"));

    let out = run(&["nullspace", data("r_h14_sym.ybm").to_str().unwrap()]);
    assert!(stdout(&out).starts_with("kernel dimension: 3"));

    let out = run(&["nullspace", data("r_h23_sym.ybm").to_str().unwrap()]);
    assert!(stdout(&out).starts_with("kernel dimension: 6"));

    let out = run(&["nullspace", data("r_identity.ybm").to_str().unwrap()]);
    assert!(stdout(&out).starts_with("kernel dimension: 16"));
}

#[test]
fn constraints_in_display_gauges() {
    let out = run(&[
        "constraints",
        data("r_h02.ybm").to_str().unwrap(),
        "--gauge",
        data("gauge_h02.ybm").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("coordinates: alpha, beta"));
    assert!(text.contains("alpha^2*beta-beta^3"));

    let out = run(&[
        "constraints",
        data("r_h14_sym.ybm").to_str().unwrap(),
        "--gauge",
        data("gauge_h14.ybm").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("alpha^2*gamma"));

    let out = run(&[
        "constraints",
        data("r_h02.ybm").to_str().unwrap(),
        "--gauge",
        data("gauge_h12s.ybm").to_str().unwrap(),
    ]);
    assert_eq!(
        out.status.code(),
        Some(2),
        "basis from another kernel must be rejected"
    );
}

#[test]
fn constraints_count_only_for_large_systems() {
    let out = run(&["constraints", data("r_identity.ybm").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("constraints: 55"));
    assert!(text.contains("use --full"));
    let out = run(&[
        "constraints",
        data("r_identity.ybm").to_str().unwrap(),
        "--full",
    ]);
    assert_eq!(stdout(&out).lines().count(), 57); // header, count, 55 polys
}

#[test]
fn constraints_have_no_prime_mode() {
    // constraint polynomials are rational-coefficient data; the subcommand
    // does not take --prime and clap rejects it as a usage error
    let out = run(&[
        "constraints",
        data("r_h02.ybm").to_str().unwrap(),
        "--prime",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn catalog_list_and_verify() {
    let out = run(&["catalog", "list"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("H1.4/antidiag"));
    assert!(text.contains("signdiag/Q6"));
    assert!(text.contains("constraints: x^2-1, y^2-1, z^2-1, b^2-a^2"));

    let out = run(&[
        "catalog",
        "verify",
        "--entry",
        "H1.4/antidiag",
        "--samples",
        "3",
        "--seed",
        "7",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("all verified"));

    let out = run(&["catalog", "verify", "--entry", "no-such"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn catalog_export_round_trips_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "catalog",
        "export",
        "--out-dir",
        dir.path().to_str().unwrap(),
        "--seed",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let mut count = 0;
    for entry in std::fs::read_dir(dir.path()).unwrap() {
        let path = entry.unwrap().path();
        count += 1;
        let out = run(&["verify", path.to_str().unwrap()]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "exported {} fails to verify: {}",
            path.display(),
            stdout(&out)
        );
    }
    assert_eq!(count, 13);
}

#[test]
fn enumerate_h02_mod_5() {
    let out = run(&[
        "enumerate",
        data("r_h02.ybm").to_str().unwrap(),
        "--prime",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("kernel dimension: 2"));
    assert!(text.contains("solutions: 13 (invertible: 12)"));

    // byte determinism
    let again = run(&[
        "enumerate",
        data("r_h02.ybm").to_str().unwrap(),
        "--prime",
        "5",
    ]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn enumerate_bound_mechanics() {
    let out = run(&[
        "enumerate",
        data("r_h02.ybm").to_str().unwrap(),
        "--prime",
        "101",
        "--bound",
        "100",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("10201"));

    // default bound admits 101^2 points
    let out = run(&[
        "enumerate",
        data("r_h02.ybm").to_str().unwrap(),
        "--prime",
        "101",
    ]);
    assert_eq!(out.status.code(), Some(0));

    // the environment variable overrides the default
    let out = bin()
        .args([
            "enumerate",
            data("r_h02.ybm").to_str().unwrap(),
            "--prime",
            "101",
        ])
        .env("YBSYS_ENUM_BOUND", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn orbit_flip_round_trips() {
    let out = run(&[
        "orbit",
        data("pair_h02_flip.ybm").to_str().unwrap(),
        "--flip",
        "--lambda=3/2",
        "--kappa=-2",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("# transformed pair verifies: yes"));

    // the report is itself a valid pair file that verifies
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("orbit.ybm");
    std::fs::write(&path, &text).unwrap();
    let out = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn orbit_with_witness_matrix() {
    let out = run(&[
        "orbit",
        data("pair_h12s_sym.ybm").to_str().unwrap(),
        "--s",
        "1,0,0,2",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("# transformed pair verifies: yes"));
}

#[test]
fn orbit_rejects_singular_s() {
    let out = run(&[
        "orbit",
        data("pair_h02_flip.ybm").to_str().unwrap(),
        "--s",
        "1,1,1,1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("singular"));
}

#[test]
fn reports_are_byte_deterministic() {
    for args in [
        vec!["catalog", "list"],
        vec!["nullspace", data("r_h14_sym.ybm").to_str().unwrap()],
        vec!["verify", data("pair_h12s_sym.ybm").to_str().unwrap()],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.stdout, b.stdout, "nondeterministic output for {args:?}");
    }
}
