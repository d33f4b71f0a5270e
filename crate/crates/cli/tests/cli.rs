//! End-to-end tests of the `gcx` binary: exit codes, JSON schema,
//! determinism, and directory runs.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn gcx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gcx"))
        .args(args)
        .env_remove("GCX_COLOR")
        .output()
        .expect("binary runs")
}

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn corpus_file(name: &str) -> String {
    corpus_dir().join(name).to_string_lossy().to_string()
}

fn write_temp(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().to_string()
}

fn temp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gcx-cli-test-{tag}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn check_torus_exits_zero_with_verdicts() {
    let out = gcx(&["check", &corpus_file("torus4.gcx")]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("lemma=yes"), "{stdout}");
    assert!(stdout.contains("inequality=yes"));
    // no ANSI when stdout is not a terminal
    assert!(!stdout.contains('\u{1b}'));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    for format in ["text", "json"] {
        let a = gcx(&[
            "check",
            &corpus_file("kt_symplectic.gcx"),
            "--format",
            format,
        ]);
        let b = gcx(&[
            "check",
            &corpus_file("kt_symplectic.gcx"),
            "--format",
            format,
        ]);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "format {format} differs between runs");
    }
}

#[test]
fn json_schema_has_the_pinned_field_names() {
    let out = gcx(&[
        "check",
        &corpus_file("kt_symplectic.gcx"),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["model"], "kt_symplectic");
    assert_eq!(value["n"], 2);
    let row = &value["per_k"][0];
    for field in [
        "k",
        "gh_del",
        "gh_delbar",
        "gh_bc",
        "gh_a",
        "lemma",
        "varouchas",
        "e1",
        "e_inf",
    ] {
        assert!(!row[field].is_null(), "missing per_k field {field}");
    }
    for field in ["a", "b", "c", "d", "e", "f"] {
        assert!(
            !row["varouchas"][field].is_null(),
            "missing varouchas field {field}"
        );
    }
    for field in [
        "inequality",
        "equality",
        "lemma",
        "degeneration",
        "decomposition",
    ] {
        assert!(
            !value["verdicts"][field].is_null(),
            "missing verdict {field}"
        );
    }
    assert_eq!(value["bridge"]["kind"], "symplectic");
    assert_eq!(value["verdicts"]["inequality"], true);
    assert_eq!(value["verdicts"]["lemma"], false);

    let complex = gcx(&["check", &corpus_file("iwasawa.gcx"), "--format", "json"]);
    let value: serde_json::Value = serde_json::from_slice(&complex.stdout).unwrap();
    assert_eq!(value["bridge"]["kind"], "complex");
    assert_eq!(value["verdicts"]["degeneration"], false);

    let spinor = gcx(&[
        "check",
        &corpus_file("torus2_spinor.gcx"),
        "--format",
        "json",
    ]);
    let value: serde_json::Value = serde_json::from_slice(&spinor.stdout).unwrap();
    assert!(value["bridge"].is_null());
}

#[test]
fn parse_errors_exit_two() {
    let dir = temp_dir("parse");
    let odd = write_temp(
        &dir,
        "odd.gcx",
        "dim 3\nalgebra (0,0,0)\nstructure symplectic omega = e12\n",
    );
    let out = gcx(&["check", &odd]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse error"));

    let bad_index = write_temp(
        &dir,
        "range.gcx",
        "dim 4\nalgebra (0,0,0,15)\nstructure symplectic omega = e12\n",
    );
    let out = gcx(&["check", &bad_index]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn structural_violations_exit_three() {
    let dir = temp_dir("structural");
    let non_integrable = write_temp(
        &dir,
        "nonint.gcx",
        "dim 4\nalgebra (0,0,0,12)\nstructure symplectic omega = e12 + e34\n",
    );
    let out = gcx(&["check", &non_integrable]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not integrable"));

    let not_square_minus_one = write_temp(
        &dir,
        "badj.gcx",
        "dim 2\nalgebra (0,0)\nstructure complex J = [[1,0],[0,1]]\n",
    );
    let out = gcx(&["check", &not_square_minus_one]);
    assert_eq!(out.status.code(), Some(3));

    let jacobi = write_temp(
        &dir,
        "jacobi.gcx",
        "dim 4\nalgebra (0,0,12,34)\nstructure symplectic omega = e13 + e24\n",
    );
    let out = gcx(&["check", &jacobi]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn corpus_directory_run_passes_and_is_deterministic() {
    let dir = corpus_dir().to_string_lossy().to_string();
    let a = gcx(&["check", &dir, "--jobs", "4"]);
    assert_eq!(
        a.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&a.stderr)
    );
    let stdout = String::from_utf8(a.stdout.clone()).unwrap();
    assert!(stdout.contains("summary: 9 models, 0 failed"), "{stdout}");
    assert!(stdout.contains("kt_symplectic: ok (lemma no,"));
    assert!(stdout.contains("torus6: ok (lemma yes,"));
    // parallel and sequential runs agree byte for byte
    let b = gcx(&["check", &dir, "--jobs", "1"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn empty_directory_is_an_empty_success() {
    let dir = temp_dir("empty");
    let out = gcx(&["check", &dir.to_string_lossy()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("summary: 0 models, 0 failed"));
}

#[test]
fn corpus_with_one_malformed_file_flags_it_and_exits_two() {
    let dir = temp_dir("mixed");
    write_temp(
        &dir,
        "good.gcx",
        "dim 2\nalgebra (0,0)\nstructure symplectic omega = e12\n",
    );
    write_temp(
        &dir,
        "bad.gcx",
        "dim 2\nalgebra (0)\nstructure symplectic omega = e12\n",
    );
    let out = gcx(&["check", &dir.to_string_lossy()]);
    assert_eq!(out.status.code(), Some(2));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("bad: FAILED"), "{stdout}");
    assert!(stdout.contains("good: ok"), "{stdout}");
}

#[test]
fn max_page_zero_is_rejected() {
    let out = gcx(&["check", &corpus_file("torus2.gcx"), "--max-page", "0"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn oracle_mode_matches_the_fast_path() {
    let fast = gcx(&["check", &corpus_file("kt_complex.gcx"), "--format", "json"]);
    let oracle = gcx(&[
        "check",
        &corpus_file("kt_complex.gcx"),
        "--format",
        "json",
        "--oracle",
    ]);
    assert_eq!(fast.status.code(), Some(0));
    assert_eq!(oracle.status.code(), Some(0));
    assert_eq!(fast.stdout, oracle.stdout);
}
