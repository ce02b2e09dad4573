//! End-to-end runs of the compiled binary: verb round-trips through the
//! ideal file format, determinism under a fixed seed, and exit codes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_trimres"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn tmpfile(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("trimres-test-{}-{}", std::process::id(), name));
    p
}

fn cleanup(paths: &[&Path]) {
    for p in paths {
        let _ = std::fs::remove_file(p);
    }
}

#[test]
fn pfaffian_ideal_flows_through_every_consumer() {
    let ideal = tmpfile("v21.ideal");
    let out = run(&[
        "pfaffians",
        "--m",
        "2",
        "--j",
        "1",
        "--out",
        ideal.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{:?}", out);

    let betti = run(&["betti", ideal.to_str().unwrap(), "--format", "machine"]);
    assert!(betti.status.success());
    let lines = stdout(&betti);
    assert!(lines.contains("betti 0 0 1"));
    assert!(lines.contains("betti 3 8 1"), "table:\n{}", lines);

    let classify = run(&["classify", ideal.to_str().unwrap(), "--format", "machine"]);
    assert!(classify.status.success());
    let report = stdout(&classify);
    assert!(report.contains("type 1"));
    // A non-CI Gorenstein quotient pairs perfectly: G(mu) = G(5).
    assert!(report.contains("class G(5)"), "report:\n{}", report);

    let trimmed = tmpfile("v21-trim.ideal");
    let trim = run(&[
        "trim",
        ideal.to_str().unwrap(),
        "--cut",
        "0",
        "--out",
        trimmed.to_str().unwrap(),
    ]);
    assert!(trim.status.success(), "{}", String::from_utf8_lossy(&trim.stderr));
    assert!(stdout(&trim).contains("agreement: ok"));

    // The emitted trimmed ideal is consumable again.
    let again = run(&["betti", trimmed.to_str().unwrap()]);
    assert!(again.status.success());
    cleanup(&[&ideal, &trimmed]);
}

#[test]
fn instance_files_are_deterministic_and_consumable() {
    let a = tmpfile("inst-a.ideal");
    let b = tmpfile("inst-b.ideal");
    let gor = tmpfile("inst-gor.ideal");
    for (path, gor_path) in [(&a, Some(&gor)), (&b, None)] {
        let mut args = vec![
            "instance",
            "--s",
            "3",
            "--ell",
            "2",
            "--seed",
            "11",
            "--out",
        ];
        args.push(path.to_str().unwrap());
        let gor_str;
        if let Some(g) = gor_path {
            gor_str = g.to_str().unwrap().to_owned();
            args.push("--out-gorenstein");
            args.push(&gor_str);
        }
        let out = run(&args);
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        assert!(stdout(&out).contains("socle shape: s=3 ell=2"));
    }
    let fa = std::fs::read(&a).unwrap();
    let fb = std::fs::read(&b).unwrap();
    assert_eq!(fa, fb, "same seed must give identical files");

    let res = run(&["resolve", a.to_str().unwrap()]);
    assert!(res.status.success());
    let gorres = run(&["classify", gor.to_str().unwrap(), "--format", "machine"]);
    assert!(gorres.status.success());
    assert!(stdout(&gorres).contains("type 1"));
    cleanup(&[&a, &b, &gor]);
}

#[test]
fn realize_output_reclassifies_to_the_same_verdict() {
    let ideal = tmpfile("realized.ideal");
    let out = run(&[
        "realize",
        "--r",
        "3",
        "--n",
        "2",
        "--out",
        ideal.to_str().unwrap(),
        "--format",
        "machine",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("class G(3)"));
    let reclass = run(&["classify", ideal.to_str().unwrap(), "--format", "machine"]);
    assert!(reclass.status.success());
    assert!(stdout(&reclass).contains("class G(3)"));
    cleanup(&[&ideal]);
}

#[test]
fn verify_suite_runs_and_exit_codes_differentiate() {
    let ok = run(&[
        "verify",
        "pfaffian-tables",
        "--s",
        "3",
    ]);
    assert!(ok.status.success());
    assert!(stdout(&ok).contains("suite pfaffian-tables: PASS"));

    let unknown = run(&["verify", "no-such-suite"]);
    assert_eq!(unknown.status.code(), Some(2));

    let bad_file = run(&["betti", "/definitely/not/here.ideal"]);
    assert_eq!(bad_file.status.code(), Some(2));

    let bad_char = run(&["pfaffians", "--m", "2", "--j", "0", "--char", "32001"]);
    assert_eq!(bad_char.status.code(), Some(2));

    let bad_params = run(&["instance", "--s", "3", "--ell", "9"]);
    assert_eq!(bad_params.status.code(), Some(2));
}

#[test]
fn malformed_ideal_files_are_rejected() {
    let path = tmpfile("bad.ideal");
    std::fs::write(&path, "char 32003\nx^2 + y\n").unwrap();
    let out = run(&["betti", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("inhomogeneous"), "stderr: {}", err);
    cleanup(&[&path]);
}

#[test]
fn gen_v_prints_the_matrix_grid() {
    let out = run(&["gen-v", "--m", "1", "--j", "0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("x^2"));
    assert!(text.contains("char 32003"));
    // 3x3 grid plus the ideal lines.
    assert!(text.lines().filter(|l| l.starts_with('[')).count() == 3);
}
