use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn hopfcat(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfcat"))
        .args(args)
        .env("HOPFCAT_CACHE", cache)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn full_suite_on_z2_passes() {
    let dir = tempfile::tempdir().unwrap();
    let o = hopfcat(dir.path(), &["verify", "--group", "Z2", "--suite", "full", "--format", "json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let report: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["group"], "Z2");
    let checks = report["checks"].as_array().unwrap();
    assert!(checks.len() > 50);
    assert!(checks.iter().all(|c| c["pass"] == true));
}

#[test]
fn verify_reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["verify", "--group", "S3", "--suite", "smoke", "--seed", "7", "--format", "json"];
    let a = hopfcat(dir.path(), &args);
    let b = hopfcat(dir.path(), &args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn s3_double_has_eight_simples() {
    let dir = tempfile::tempdir().unwrap();
    let o = hopfcat(dir.path(), &["double", "irreps", "--group", "S3", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let records: Vec<Value> = serde_json::from_slice(&o.stdout).unwrap();
    let mut dims: Vec<u64> = records.iter().map(|r| r["dim"].as_u64().unwrap()).collect();
    dims.sort();
    assert_eq!(dims, [1, 1, 2, 2, 2, 2, 3, 3]);
}

#[test]
fn unknown_group_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let o = hopfcat(dir.path(), &["verify", "--group", "BadName"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("BadName"));
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["frobnicate"][..],
        &["verify", "--group", "S3", "--suite", "bogus"],
        &["chartab"],
        &["chartab", "--group", "S3", "--format", "dot"],
        &["chartab", "--group", "S3", "--max-algebra-dim", "0"],
        &["chartab", "--group", "perm:(1 2"],
        &["coideals", "integral", "--group", "S3", "--triple", "M=1,H=1,B=0"],
        &["centralizer", "--group", "S3", "--simples", "0,2"],
    ] {
        let o = hopfcat(dir.path(), args);
        assert_eq!(code(&o), 2, "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn dimension_bound_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let o = hopfcat(dir.path(), &["double", "smatrix", "--group", "S4"]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("576"));
    let o = hopfcat(dir.path(), &["double", "smatrix", "--group", "S3", "--max-algebra-dim", "35"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn cache_hits_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let first = hopfcat(dir.path(), &["double", "smatrix", "--group", "S3"]);
    assert_eq!(code(&first), 0);
    let entries = fs::read_dir(dir.path()).unwrap().count();
    assert_eq!(entries, 1);
    let second = hopfcat(dir.path(), &["double", "smatrix", "--group", "S3"]);
    assert_eq!(first.stdout, second.stdout);
    assert!(second.stderr.is_empty());
    let fresh = hopfcat(dir.path(), &["double", "smatrix", "--group", "S3", "--no-cache"]);
    assert_eq!(first.stdout, fresh.stdout);
}

#[test]
fn deleted_cache_dir_is_recreated() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("nested").join("cache");
    let a = hopfcat(&cache, &["chartab", "--group", "Q8", "--format", "json"]);
    assert_eq!(code(&a), 0);
    fs::remove_dir_all(&cache).unwrap();
    let b = hopfcat(&cache, &["chartab", "--group", "Q8", "--format", "json"]);
    assert_eq!(code(&b), 0);
    assert_eq!(a.stdout, b.stdout);
    assert!(cache.exists());
}

#[test]
fn corrupt_entries_warn_and_recompute() {
    let dir = tempfile::tempdir().unwrap();
    let a = hopfcat(dir.path(), &["subcats", "list", "--group", "Z2"]);
    assert_eq!(code(&a), 0);
    for e in fs::read_dir(dir.path()).unwrap() {
        fs::write(e.unwrap().path(), b"{\"version\": 1, \"trunc").unwrap();
    }
    let b = hopfcat(dir.path(), &["subcats", "list", "--group", "Z2"]);
    assert_eq!(code(&b), 0);
    assert_eq!(a.stdout, b.stdout);
    assert!(stderr(&b).contains("warning"), "{}", stderr(&b));
    let c = hopfcat(dir.path(), &["subcats", "list", "--group", "Z2"]);
    assert!(c.stderr.is_empty());
}

#[test]
fn cache_purge_empties_the_directory() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&hopfcat(dir.path(), &["chartab", "--group", "Z3"])), 0);
    let o = hopfcat(dir.path(), &["cache", "purge"]);
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stdout).contains("removed 1"));
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 0);
}

#[test]
fn lattice_dot_marks_the_centralizer_involution() {
    let dir = tempfile::tempdir().unwrap();
    let o = hopfcat(dir.path(), &["subcats", "lattice", "--group", "S3", "--format", "dot"]);
    assert_eq!(code(&o), 0);
    let dot = String::from_utf8(o.stdout).unwrap();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("[label=\"S(").count(), 8);
    assert!(dot.contains("fpdim=36"));
    assert_eq!(dot.matches("color=red").count(), 5);
}

#[test]
fn centralizer_methods_agree_from_the_command_line() {
    let dir = tempfile::tempdir().unwrap();
    let o = hopfcat(
        dir.path(),
        &["centralizer", "--group", "D4", "--simples", "0,1", "--format", "json"],
    );
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["agree"], true);
    let c = v["centralizers"].as_array().unwrap();
    assert_eq!(c.len(), 3);
    // FPdim(D) FPdim(D') = dim D(D4) = 64.
    assert_eq!(v["subcategory"]["fpdim"].as_u64().unwrap() * c[0]["fpdim"].as_u64().unwrap(), 64);
}

#[test]
fn text_output_renders_cyclotomics() {
    let dir = tempfile::tempdir().unwrap();
    let o = hopfcat(dir.path(), &["chartab", "--group", "Z3"]);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("z(3)"), "{text}");
    let o = hopfcat(dir.path(), &["chartab", "--group", "Z3", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["chars"].as_array().unwrap().len(), 3);
}
