use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use bott_index::{fixtures, TowerSpec};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bott-index")).args(args).output().expect("run binary")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn spec_file(dir: &Path, name: &str, spec: &TowerSpec) -> String {
    write(dir, name, &spec.to_json()).to_str().unwrap().to_owned()
}

#[test]
fn validate_reports_shape_and_errors() {
    let dir = tempfile::tempdir().unwrap();
    let good = spec_file(dir.path(), "good.json", &fixtures::mixed_sign_tower());
    let out = bin(&["validate", "-f", &good]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "m=2, N=3");

    let bad = write(dir.path(), "bad.json", r#"{"n":[1,2],"l":[1,2],"c":{"2,1":[1]}}"#);
    let out = bin(&["validate", "-f", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("BadCIndex"));

    let out = bin(&["validate", "-f", dir.path().join("absent.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn zero_fill_flag_accepts_missing_couplings() {
    let dir = tempfile::tempdir().unwrap();
    let sparse = write(dir.path(), "sparse.json", r#"{"n":[1,1],"l":[1,1]}"#);
    let path = sparse.to_str().unwrap();
    assert_eq!(bin(&["validate", "-f", path]).status.code(), Some(2));
    assert_eq!(bin(&["validate", "-f", path, "--zero-fill-c"]).status.code(), Some(0));
}

#[test]
fn cube_emits_csv_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let negative = spec_file(dir.path(), "neg.json", &fixtures::negative_tower());
    let out = bin(&["cube", "-f", &negative, "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|r| r.ends_with(",-1")));

    let mixed = spec_file(dir.path(), "mixed.json", &fixtures::mixed_sign_tower());
    let out = bin(&["cube", "-f", &mixed, "--format", "json"]);
    let entries: Vec<serde_json::Value> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(entries.len(), 12);

    // ℓ = -1 on a projective line: no sections, no higher cohomology.
    let empty = spec_file(dir.path(), "empty.json", &TowerSpec::new(&[1], &[-1], []).unwrap());
    let out = bin(&["cube", "-f", &empty, "--format", "csv"]);
    assert_eq!(stdout(&out).lines().count(), 1);
}

#[test]
fn char_methods_and_formats() {
    let dir = tempfile::tempdir().unwrap();
    let balanced = spec_file(dir.path(), "balanced.json", &fixtures::balanced_tower());
    let out = bin(&["char", "-f", &balanced, "--method", "demazure", "--format", "json"]);
    let terms: Vec<serde_json::Value> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(terms.len(), 21);
    assert!(terms.iter().all(|t| t["coeff"] == 1));

    let negative = spec_file(dir.path(), "neg.json", &fixtures::negative_tower());
    let out = bin(&["char", "-f", &negative, "--method", "cube", "--format", "json"]);
    let terms: Vec<serde_json::Value> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(terms.len(), 5);
    assert!(terms.iter().all(|t| t["coeff"] == -1));

    let trivial = spec_file(dir.path(), "trivial.json", &TowerSpec::new(&[1], &[0], []).unwrap());
    let out = bin(&["char", "-f", &trivial]);
    assert_eq!(stdout(&out).trim(), "λ^{e_2}");
}

#[test]
fn verify_single_spec_and_random_batch() {
    let dir = tempfile::tempdir().unwrap();
    let mixed = spec_file(dir.path(), "mixed.json", &fixtures::mixed_sign_tower());
    let out = bin(&["verify", "-f", &mixed, "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["equal"], true);
    assert_eq!(report["n_terms"], 12);
    assert_eq!(report["signed_count"], 8);

    let args = ["verify", "--random", "--trials", "25", "--max-m", "2", "--max-n", "2", "--seed", "7"];
    let serial = bin(&args);
    assert_eq!(serial.status.code(), Some(0));
    let parallel = bin(&[&args[..], &["--jobs", "2"]].concat());
    assert_eq!(stdout(&serial), stdout(&parallel));
    assert!(stdout(&serial).ends_with("seed=7 trials=25 mismatches=0\n"));
}

#[test]
fn localize_check_defaults_and_failures() {
    let out = bin(&["localize-check"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("PASS"));

    assert_eq!(bin(&["localize-check", "--trials", "0"]).status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    // Well-formed but wrong: a single fixed-point term cannot match.
    let wrong = write(
        dir.path(),
        "wrong.json",
        r#"{"global":[0,0,0,1],"terms":[{"num":[0,0,0,0],"den":[[1,0,0,0]]}]}"#,
    );
    let out = bin(&["localize-check", "--expr", wrong.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));

    let malformed = write(dir.path(), "malformed.json", r#"{"global":[0,1],"terms":[]}"#);
    let out = bin(&["localize-check", "--expr", malformed.to_str().unwrap()]);
    assert_ne!(out.status.code(), Some(0));
}

#[test]
fn missing_subcommand_is_a_usage_error() {
    assert_eq!(bin(&[]).status.code(), Some(2));
}
