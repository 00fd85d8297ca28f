use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vqchar"))
        .args(args)
        .env_remove("VQCHAR_CACHE_DIR")
        .output()
        .unwrap()
}

fn code(args: &[&str]) -> Option<i32> {
    run(args).status.code()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&["verify", "--prime", "4"]), Some(2));
    assert_eq!(code(&["verify", "--prime", "2"]), Some(2));
    assert_eq!(code(&["verify", "--prime", "101"]), Some(2));
    assert_eq!(
        code(&["verify", "--prime", "11", "--max-prime", "7"]),
        Some(2)
    );
    assert_eq!(code(&["verify", "--prime", "5", "--label", "0,0"]), Some(2));
    assert_eq!(code(&["verify", "--prime", "5", "--label", "1"]), Some(2));
    assert_eq!(code(&["scan", "--primes", "7..3"]), Some(2));
    assert_eq!(code(&["scan", "--primes", "3..7", "--jobs", "0"]), Some(2));
    assert_eq!(code(&["frobnicate"]), Some(2));
    assert_eq!(code(&["verify"]), Some(2));
}

#[test]
fn usage_error_names_the_problem() {
    let out = run(&["verify", "--prime", "9"]);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("9 is not an odd prime"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn verify_text_ends_with_verdict() {
    let out = run(&["verify", "--prime", "5", "--label", "1,2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.trim_end().ends_with("verdict: PASS"), "{text}");
    assert!(text.contains("[χ², ψ] = 2"));
}

#[test]
fn verify_csv_has_one_row_per_report() {
    let out = run(&[
        "verify",
        "--prime",
        "7",
        "--format",
        "csv",
        "--alt-subgroup",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("prime,label,"));
}

#[test]
fn alt_subgroup_gives_both_reports() {
    let out = run(&[
        "verify",
        "--prime",
        "5",
        "--format",
        "json",
        "--alt-subgroup",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let reports: Vec<Value> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(reports.len(), 2);
    assert_ne!(reports[0]["quaternion"], reports[1]["quaternion"]);
    assert_eq!(
        reports[0]["psi_multiplicity"],
        reports[1]["psi_multiplicity"]
    );
    // p = 3 has a single quaternion subgroup, so one plain report
    let out = run(&[
        "verify",
        "--prime",
        "3",
        "--format",
        "json",
        "--alt-subgroup",
    ]);
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report.is_object());
}

#[test]
fn out_flag_writes_file_and_cache_is_reused() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let target = dir.path().join("t.csv");
    let args = [
        "table",
        "--prime",
        "5",
        "--format",
        "csv",
        "--cache",
        cache.to_str().unwrap(),
        "--out",
        target.to_str().unwrap(),
    ];
    let first = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert!(first.stdout.is_empty());
    assert!(String::from_utf8_lossy(&first.stderr).contains("cache miss"));
    assert!(cache.join("table_p5.json").exists());
    let csv = fs::read_to_string(&target).unwrap();
    assert!(csv.starts_with("name,degree,indicator,K0,"));
    assert_eq!(csv.lines().count(), 1 + 8);

    let second = run(&args);
    assert!(String::from_utf8_lossy(&second.stderr).contains("cache hit"));
    assert_eq!(fs::read_to_string(&target).unwrap(), csv);
}

#[test]
fn cached_and_fresh_json_agree() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let fresh = run(&["table", "--prime", "7", "--format", "json"]);
    let miss = run(&[
        "table", "--prime", "7", "--format", "json", "--cache", cache,
    ]);
    let hit = run(&[
        "table", "--prime", "7", "--format", "json", "--cache", cache,
    ]);
    assert_eq!(fresh.stdout, miss.stdout);
    assert_eq!(fresh.stdout, hit.stdout);
    let doc: Value = serde_json::from_slice(&hit.stdout).unwrap();
    assert_eq!(doc["format"], 1);
    assert_eq!(doc["characters"].as_array().unwrap().len(), 11);
}

#[test]
fn corrupt_cache_entry_is_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("table_p3.json"), "{\"format\": 1").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_vqchar"))
        .args(["table", "--prime", "3", "--format", "json"])
        .env("VQCHAR_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["group_order"], 72);
}

#[test]
fn scan_of_one_prime_matches_verify() {
    let scan = run(&[
        "scan",
        "--primes",
        "3..3",
        "--format",
        "json",
        "--no-timings",
    ]);
    let verify = run(&["verify", "--prime", "3", "--format", "json"]);
    let s: Value = serde_json::from_slice(&scan.stdout).unwrap();
    let v: Value = serde_json::from_slice(&verify.stdout).unwrap();
    let only = &s["primes"][0]["labels"][0];
    assert_eq!(s["primes"].as_array().unwrap().len(), 1);
    assert_eq!(only["pass"], v["pass"]);
    assert_eq!(only["psi_multiplicity"], v["psi_multiplicity"]);
    assert_eq!(only["label"], v["label"]);
    assert!(s["primes"][0].get("elapsed_ms").is_none());
}

#[test]
fn scan_with_alternative_subgroup() {
    let out = run(&[
        "scan",
        "--primes",
        "5..7",
        "--alt-subgroup",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let s: Value = serde_json::from_slice(&out.stdout).unwrap();
    for p in s["primes"].as_array().unwrap() {
        assert_eq!(
            p["alternative"].as_array().unwrap().len(),
            p["labels"].as_array().unwrap().len()
        );
        assert!(p["elapsed_ms"].is_number());
    }
}

#[test]
fn selftest_reports_every_check() {
    let out = run(&["selftest", "--prime", "5", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let o: Value = serde_json::from_slice(&out.stdout).unwrap();
    let checks = o["checks"].as_array().unwrap();
    assert!(checks.len() > 10);
    assert!(checks.iter().all(|c| c["passed"] == true));
}

#[test]
fn selftest_text_lines() {
    let p3 = stdout(&run(&["selftest", "--prime", "3"]));
    assert!(p3.contains("[ok] sum rule: 10 = 1 + 3²"), "{p3}");
    let p7 = stdout(&run(&["selftest", "--prime", "7"]));
    assert!(p7.contains("[ok] orbit count: 6 = (7²−1)/8"), "{p7}");
    assert_eq!(code(&["selftest", "--prime", "9"]), Some(2));
}
