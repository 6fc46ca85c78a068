//! Drives the `szeged` binary end to end.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn szeged(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_szeged"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_json_from_stdin() {
    let o = szeged(&["compute", "--format", "json"], "DUW\n");
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["wiener"], 15);
    assert_eq!(v[0]["szeged"], 20);
    assert_eq!(v[0]["szstar_over_w"], "25/12");
}

#[test]
fn compute_reports_bad_lines_and_continues() {
    let o = szeged(&["compute"], "DUW\n!!\n");
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("DUW\t5\t5")));
    assert!(text.lines().any(|l| l.starts_with("!!\terror")));
}

#[test]
fn enum_and_gen() {
    let o = szeged(&["enum", "--class", "unicyclic", "--n", "8"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 89);

    let o = szeged(&["gen", "bns:8:2"], "");
    assert_eq!(o.status.code(), Some(0));
    let g6 = stdout(&o);
    let c = szeged(&["compute", "--format", "json"], &g6);
    let v: serde_json::Value = serde_json::from_str(&stdout(&c)).unwrap();
    assert_eq!(v[0]["wiener"], 69);
}

#[test]
fn enum_writes_file_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.g6");
    let cache = dir.path().join("cache");
    let o = szeged(
        &["enum", "--class", "trees", "--n", "9", "--out", out.to_str().unwrap(), "--cache", cache.to_str().unwrap()],
        "",
    );
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().count(), 47);
    let cached = std::fs::read_dir(&cache).unwrap().count();
    assert_eq!(cached, 1);
}

#[test]
fn rank_top_tiers() {
    let o = szeged(&["rank", "--class", "trees", "--n", "7", "--top", "2", "--format", "json"], "");
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["class_size"], 11);
    assert_eq!(v["tiers"][0]["wiener"], 56);
}

#[test]
fn verify_exit_codes_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let o = szeged(&["verify", "thm2.2", "--n", "7", "--report", report.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["results"][0]["passed"], true);
    assert!(v["results"][0].get("runtime_ms").is_none());

    // the sixth tier has a tie at n = 10
    let o = szeged(&["verify", "thm2.1", "--n", "10"], "");
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));

    assert_eq!(szeged(&["verify", "thm9.9"], "").status.code(), Some(2));
    assert_eq!(szeged(&["verify", "thm2.4", "--full", "--restricted"], "").status.code(), Some(2));
    assert_eq!(szeged(&["frobnicate"], "").status.code(), Some(2));
}

#[test]
fn guard_is_a_usage_error() {
    let o = szeged(&["enum", "--class", "connected", "--n", "12"], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("guard"));
}

#[test]
fn list_checks() {
    let o = szeged(&["verify", "--list"], "");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for id in ["thm1.1", "thm2.4", "trees", "lemmas", "closed-forms"] {
        assert!(text.contains(id), "{id}");
    }
}
