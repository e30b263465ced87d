//! Acceptance checks for the command-line surface.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_riordan"))
}

#[test]
fn criterion_10_verify_paper_command() {
    let out = bin().arg("verify-paper").output().unwrap();
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(
        out.status.success(),
        "verify-paper failed:\n{text}\n{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(text.lines().filter(|l| l.starts_with("PASS")).count() >= 30);
    assert!(!text.contains("FAIL"));

    let out = bin()
        .args(["verify-paper", "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let checks = report["checks"].as_array().unwrap();
    let passing = checks
        .iter()
        .filter(|c| c["pass"].as_bool() == Some(true))
        .count();
    assert!(passing >= 30, "only {passing} passing checks");
    assert_eq!(report["failed"].as_u64(), Some(0));
    for check in checks {
        assert!(check["name"].is_string());
        assert!(check["expected"].is_string());
        assert!(check["actual"].is_string());
    }
    // The families of worked examples are each represented by name.
    for name in [
        "binomial.even.entries",
        "catalan.even.pair",
        "two.weight.array.rows",
        "central.embed.recovers.parent",
        "three.weight.even.moments",
        "shift.family.p.moments",
        "shift.family.moment.reversion",
    ] {
        assert!(
            checks.iter().any(|c| c["name"] == *name),
            "missing check {name}"
        );
    }
}

#[test]
fn show_prints_binomial_rows() {
    let out = bin()
        .args(["show", "1/(1-x)", "x/(1-x)", "--rows", "6"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    let last = text.lines().filter(|l| !l.trim().is_empty()).last().unwrap();
    let cells: Vec<&str> = last.split_whitespace().collect();
    assert_eq!(cells, ["1", "5", "10", "10", "5", "1"]);
}

#[test]
fn show_json_round_trips() {
    let out = bin()
        .args(["show", "c", "x*c", "--rows", "4", "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let rows: Vec<Vec<String>> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rows[3], ["5", "5", "3", "1"]);
}

#[test]
fn parse_errors_exit_2() {
    let out = bin().args(["show", "1/(1-", "x"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("offset"), "stderr: {err}");
}

#[test]
fn invariant_violations_exit_3() {
    // Not a valid pair: f must vanish at 0.
    let out = bin().args(["show", "1", "1+x"]).output().unwrap();
    assert_eq!(out.status.code(), Some(3));

    // Config invariant: order must be at least rows.
    let out = bin()
        .args(["show", "1", "x", "--order", "4", "--rows", "8"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn non_embeddable_pairs_exit_4_with_coefficient() {
    let out = bin().args(["embed", "1", "x*(1+x)"]).output().unwrap();
    assert_eq!(out.status.code(), Some(4));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("1/2"), "stderr: {err}");
    assert!(err.contains("x^1"), "stderr: {err}");
}

#[test]
fn offline_lookup_without_cache_exits_5() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin()
        .env("RIORDAN_OEIS_CACHE_DIR", dir.path())
        .args(["oeis", "1,1,2,5,14,42", "--offline"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(5));
}

#[test]
fn offline_lookup_with_warm_cache_succeeds() {
    let dir = tempfile::tempdir().unwrap();
    // Seed the cache exactly where the client will look.
    let fixture = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/tests/fixtures/search_1_1_2_5_14_42.json");
    let client = riordan_core::oeis::OeisClient::with_cache_dir(dir.path().to_path_buf(), true);
    let q = riordan_core::oeis::SequenceQuery::new(
        [1i64, 1, 2, 5, 14, 42]
            .iter()
            .map(|&t| riordan_core::rational::int(t))
            .collect(),
        5,
    )
    .unwrap();
    client
        .prime_cache(&q, &std::fs::read_to_string(fixture).unwrap())
        .unwrap();

    let out = bin()
        .env("RIORDAN_OEIS_CACHE_DIR", dir.path())
        .args(["oeis", "1,1,2,5,14,42", "--offline", "--max", "1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("A000108"), "stdout: {text}");
}

#[test]
fn genfrom_regrows_bidiagonal_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("production.json");
    let out = bin()
        .args([
            "bidiag",
            "--period",
            "2,3",
            "--production",
            "--rows",
            "5",
            "--format",
            "json",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    std::fs::write(&path, &out.stdout).unwrap();

    let out = bin()
        .args(["genfrom", path.to_str().unwrap(), "--rows", "5"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    let last = text.lines().filter(|l| !l.trim().is_empty()).last().unwrap();
    let cells: Vec<&str> = last.split_whitespace().collect();
    assert_eq!(cells, ["430", "215", "51", "10", "1"]);
}

#[test]
fn orthopoly_check_confirms_jacobi_moments() {
    let out = bin()
        .args(["orthopoly", "check", "--b", "1:2", "--c", "1", "--p1", "-1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("match: true"));
}
