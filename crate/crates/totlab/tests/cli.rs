//! End-to-end checks of the `totlab` binary: every subcommand is a thin
//! adapter over the library (stdout equals the library result), and every
//! error class maps to its documented exit code.

use rand::{Rng, SeedableRng};
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_totlab"))
}

fn run_ok(args: &[&str]) -> String {
    let out = bin().args(args).output().expect("spawn totlab");
    assert!(
        out.status.success(),
        "totlab {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8 stdout")
}

fn exit_code(args: &[&str]) -> i32 {
    bin()
        .args(args)
        .output()
        .expect("spawn totlab")
        .status
        .code()
        .expect("exit code")
}

#[test]
fn subcommands_are_thin_adapters() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
    let mut cache = totlab::SummatoryCache::new();
    for _ in 0..10 {
        let x = rng.gen_range(1..=30_000u64);
        assert_eq!(
            run_ok(&["phi-sum", "--x", &x.to_string()]).trim(),
            totlab::phi_sum_fast(x, &mut cache).unwrap().to_string(),
            "phi-sum at {x}"
        );
        assert_eq!(
            run_ok(&["mertens", "--x", &x.to_string()]).trim(),
            totlab::mertens_fast(x, &mut cache).unwrap().to_string(),
            "mertens at {x}"
        );
        assert_eq!(
            run_ok(&["divisor-sum", "--x", &x.to_string()]).trim(),
            totlab::divisor_sum(x).unwrap().to_string(),
        );
        assert_eq!(
            run_ok(&["squarefree", "--x", &x.to_string()]).trim(),
            totlab::squarefree_count(x).unwrap().to_string(),
        );
    }
    for _ in 0..10 {
        let x = rng.gen_range(2..=2_000u64);
        assert_eq!(
            run_ok(&["twisted", "--kind", "mobius-frac", "--x", &x.to_string()]).trim(),
            totlab::mobius_frac_sum(x).unwrap().to_string(),
        );
        assert_eq!(
            run_ok(&["r-point", "--n", &x.to_string()]).trim(),
            totlab::r_point(x).unwrap().to_string(),
        );
        assert_eq!(
            run_ok(&["phi-over-n", "--x", &x.to_string()]).trim(),
            totlab::phi_over_n_sum_exact(x).unwrap().to_string(),
        );
    }
}

#[test]
fn documented_exit_codes() {
    // 0: success
    assert_eq!(exit_code(&["phi-sum", "--x", "100"]), 0);
    // 1: domain errors
    assert_eq!(exit_code(&["phi-sum", "--x", "0"]), 1);
    assert_eq!(exit_code(&["error-scan", "--lo", "10", "--hi", "5"]), 1);
    assert_eq!(exit_code(&["explicit", "--x", "10"]), 1); // integer x
    // 1: unknown flags are rejected
    assert_eq!(exit_code(&["phi-sum", "--x", "100", "--bogus"]), 1);
    // 2: resource errors
    assert_eq!(exit_code(&["decompose", "--x", "2000000"]), 2);
    assert_eq!(exit_code(&["sieve", "--lo", "1", "--hi", "200000001"]), 2);
    // help exits 0
    assert_eq!(exit_code(&["--help"]), 0);
}

#[test]
fn version_reports_contract_region() {
    let v = run_ok(&["--version"]);
    assert!(v.contains("totlab 0.1.0"), "version line: {v}");
    assert!(v.contains("zeta contract"), "missing contract region: {v}");
    assert!(v.contains("150"), "missing contract bound: {v}");
}

#[test]
fn zeros_roundtrip_and_validation() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zeros.txt");
    let line = run_ok(&[
        "zeros-find",
        "--t-max",
        "30",
        "--emit",
        path.to_str().unwrap(),
    ]);
    assert!(line.contains("3 zeros"), "{line}");
    let loaded = run_ok(&["zeros-load", "--zeros", path.to_str().unwrap()]);
    assert!(loaded.contains("3 zeros loaded"), "{loaded}");

    // Corrupted file: format diagnostic, exit 1.
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "fourteen point one\n").unwrap();
    assert_eq!(exit_code(&["zeros-load", "--zeros", bad.to_str().unwrap()]), 1);
    assert_eq!(
        exit_code(&["selftest", "--quick", "--zeros", bad.to_str().unwrap()]),
        1
    );
}

#[test]
fn checkpoints_resolve_against_cache_dir() {
    let dir = tempfile::tempdir().unwrap();
    let out1 = bin()
        .args(["phi-sum", "--x", "1000000", "--checkpoint", "phi.jsonl"])
        .env("TOTLAB_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert!(out1.status.success());
    let ckpt = dir.path().join("phi.jsonl");
    assert!(ckpt.exists(), "checkpoint not written under TOTLAB_CACHE_DIR");
    let text = std::fs::read_to_string(&ckpt).unwrap();
    assert!(text.lines().count() > 0);
    assert!(text.contains("\"kind\":\"PHI_SUM\""), "{text}");

    // Second run loads the checkpoint and prints the same value.
    let out2 = bin()
        .args(["phi-sum", "--x", "1000000", "--checkpoint", "phi.jsonl"])
        .env("TOTLAB_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(out1.stdout, out2.stdout);
}

#[test]
fn scan_csv_identical_across_thread_flags() {
    let dir = tempfile::tempdir().unwrap();
    let p1 = dir.path().join("t1.csv");
    let p8 = dir.path().join("t8.csv");
    let s1 = run_ok(&[
        "--threads", "1", "error-scan", "--lo", "3000", "--hi", "3500",
        "--step", "1", "--out", p1.to_str().unwrap(),
    ]);
    let s8 = run_ok(&[
        "--threads", "8", "error-scan", "--lo", "3000", "--hi", "3500",
        "--step", "1", "--out", p8.to_str().unwrap(),
    ]);
    assert_eq!(s1, s8, "summary lines differ across --threads");
    assert!(s1.starts_with("sign_changes="), "{s1}");
    let b1 = std::fs::read(&p1).unwrap();
    let b8 = std::fs::read(&p8).unwrap();
    assert_eq!(b1, b8, "CSV bytes differ across --threads");
    // 501 rows plus the header.
    assert_eq!(b1.iter().filter(|&&c| c == b'\n').count(), 502);
}

#[test]
fn selftest_quick_passes_within_budget() {
    let start = std::time::Instant::now();
    let out = bin().args(["selftest", "--quick"]).output().unwrap();
    let elapsed = start.elapsed();
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(out.status.success(), "selftest failed:\n{text}");
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 8);
    assert!(elapsed.as_secs() <= 60, "selftest --quick took {elapsed:?}");
}
