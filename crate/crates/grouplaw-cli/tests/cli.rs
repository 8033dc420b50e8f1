//! End-to-end tests of the `grouplaw` binary: flags, exit codes, file
//! format round-trips and the record output schema.

use std::process::{Command, Output};

fn grouplaw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grouplaw"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn check_s3_is_consistent_and_vacuous() {
    let out = grouplaw(&["check", "--group", "S3", "--m", "2", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("P(2,3): false"), "{text}");
    assert!(text.contains("abelian: false"), "{text}");
    assert!(text.contains("theorem 3.1: vacuous"), "{text}");
}

#[test]
fn non_coprime_pair_is_a_usage_error() {
    let out = grouplaw(&["check", "--group", "S3", "--m", "2", "--n", "4"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("not coprime"), "{err}");
}

#[test]
fn bad_spec_and_bad_flags_are_usage_errors() {
    assert_eq!(grouplaw(&["check", "--group", "X9", "--m", "2", "--n", "3"]).status.code(), Some(1));
    assert_eq!(grouplaw(&["check", "--group", "S3"]).status.code(), Some(1));
    assert_eq!(grouplaw(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(grouplaw(&["--help"]).status.code(), Some(0));
}

#[test]
fn record_output_is_line_delimited_json_with_a_stable_schema() {
    let out = grouplaw(&["check", "--group", "S3", "--m", "2", "--n", "3", "--format", "records"]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&out)
        .lines()
        .map(|l| serde_json::from_str(l).expect("valid JSON"))
        .collect();
    assert_eq!(lines.len(), 2);
    let property = &lines[0];
    assert_eq!(property["record"], "property");
    assert_eq!(property["group"], "S3");
    assert_eq!(property["order"], 6);
    assert_eq!(property["satisfies_p"], false);
    assert!(property["witness"]["a"].is_u64());
    assert!(property["wall_micros"].is_u64());
    let verdict = &lines[1];
    assert_eq!(verdict["record"], "verdict");
    assert_eq!(verdict["statement"], "theorem-3.1");
    assert_eq!(verdict["holds"], true);
    assert_eq!(verdict["vacuous"], true);
}

#[test]
fn scan_reports_zero_counterexamples() {
    let out = grouplaw(&["scan", "--max-order", "8", "--pairs", "2,3;3,4", "--catalog"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.trim_end().ends_with("counterexamples: 0"), "{text}");
}

#[test]
fn scan_records_summary_counts_rows() {
    let out = grouplaw(&[
        "scan", "--max-order", "6", "--enumerate", "--format", "records",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let summary = lines.last().unwrap();
    assert_eq!(summary["record"], "summary");
    assert_eq!(summary["rows"].as_u64().unwrap() as usize, lines.len() - 1);
    assert_eq!(summary["counterexamples"], 0);
    // Orders 1..6 have 1+1+1+2+1+2 = 8 isomorphism classes, one pair each.
    assert_eq!(lines.len() - 1, 8);
}

#[test]
fn scan_output_is_deterministic() {
    let args = ["scan", "--max-order", "10", "--pairs", "2,3;2,5"];
    let a = grouplaw(&args);
    let b = grouplaw(&args);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
}

#[test]
fn enumerate_writes_loadable_cayley_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = grouplaw(&["enumerate", "--order", "8", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "order 8: 5 classes");
    let mut paths: Vec<_> = std::fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    paths.sort();
    assert_eq!(paths.len(), 5);
    // Every emitted file loads back through the @path spec syntax.
    for path in &paths {
        let spec = format!("@{}", path.display());
        let check = grouplaw(&["check", "--group", &spec, "--m", "2", "--n", "3"]);
        assert_eq!(check.status.code(), Some(0), "{spec}");
    }
}

#[test]
fn cayley_file_products_compose_with_named_bases() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k.tbl");
    std::fs::write(&path, "# name: klein\n4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n").unwrap();
    let spec = format!("@{}xC3", path.display());
    let out = grouplaw(&["lattice", "--group", &spec]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("(order 12)"), "{}", stdout(&out));
}

#[test]
fn law_subcommand_reports_witnesses() {
    let out = grouplaw(&["law", "--group", "S3", "--law", "[x^2,y^2]=1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("holds"));
    let out = grouplaw(&["law", "--group", "S3", "--law", "[x,y]=1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("fails at"));
    let out = grouplaw(&["law", "--group", "S3", "--law", "[x,y"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn sylow_and_decompose_smoke() {
    let out = grouplaw(&["sylow", "--group", "S3", "--p", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("holds"));
    let out = grouplaw(&["sylow", "--group", "S3", "--p", "5"]);
    assert_eq!(out.status.code(), Some(1));

    let out = grouplaw(&["decompose", "--group", "C12", "--element", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("verified: true"));
    let out = grouplaw(&["decompose", "--group", "C12", "--element", "99"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn env_variables_override_the_caps() {
    let out = Command::new(env!("CARGO_BIN_EXE_grouplaw"))
        .args(["enumerate", "--order", "6"])
        .env("GROUPLAW_ENUM_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("exceeds the cap"), "{err}");

    let out = Command::new(env!("CARGO_BIN_EXE_grouplaw"))
        .args(["check", "--group", "S3", "--m", "2", "--n", "3"])
        .env("GROUPLAW_EVAL_BUDGET", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}
