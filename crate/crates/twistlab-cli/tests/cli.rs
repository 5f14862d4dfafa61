//! End-to-end tests of the binary: exit codes, determinism, golden files.

use std::path::PathBuf;
use std::process::Command;

fn fixture(name: &str) -> String {
    format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_twistlab"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("no signal"),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}

fn temp_file(tag: &str, content: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("twistlab-cli-{tag}-{}.json", std::process::id()));
    std::fs::write(&path, content).unwrap();
    path
}

#[test]
fn validate_all_fixtures() {
    for (name, expect) in [
        ("fig1.json", "ok: modal-heyting with 5 elements\n"),
        ("fig2.json", "ok: modal-nelson with 9 elements\n"),
        ("boolean2.json", "ok: heyting with 2 elements\n"),
        ("boolean4.json", "ok: heyting with 4 elements\n"),
        ("boolean8.json", "ok: heyting with 8 elements\n"),
        ("c3.json", "ok: heyting with 3 elements\n"),
    ] {
        let (code, stdout, stderr) = run(&["validate", &fixture(name)]);
        assert_eq!((code, stdout.as_str()), (0, expect), "{name}: {stderr}");
    }
}

#[test]
fn check_exit_codes_follow_law_outcomes() {
    let (code, stdout, _) = run(&["check", &fixture("fig1.json"), "--law", "mH"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "PASS mH\n");
    let (code, stdout, _) = run(&["check", &fixture("fig1.json"), "--law", "all"]);
    assert_eq!(code, 1, "the kite operators fail the classical axioms");
    assert!(stdout.contains("PASS mH\n"));
    assert!(stdout.contains("FAIL mH1"));
    let (code, _, stderr) = run(&["check", &fixture("fig1.json"), "--law", "nonsense"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("unknown law"));
}

#[test]
fn malformed_input_is_exit_two() {
    let bad = temp_file("malformed", "{ not json");
    let (code, _, stderr) = run(&["validate", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("error:"));
    std::fs::remove_file(bad).ok();
    let (code, _, stderr) = run(&["validate", "/nonexistent/nowhere.json"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("error:"));
}

#[test]
fn twist_is_deterministic_and_matches_the_committed_figure() {
    let (code, first, _) = run(&["twist", &fixture("fig1.json")]);
    assert_eq!(code, 0);
    let (_, second, _) = run(&["twist", &fixture("fig1.json")]);
    assert_eq!(first, second, "byte-identical across runs");
    let twisted = temp_file("twisted", &first);
    let (code, stdout, _) =
        run(&["iso", twisted.to_str().unwrap(), &fixture("fig2.json"), "--format", "machine"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("{\"isomorphic\": true"));
    std::fs::remove_file(twisted).ok();
}

#[test]
fn twist_skeleton_round_trip() {
    let (_, twisted, _) = run(&["twist", &fixture("fig1.json")]);
    let twisted_file = temp_file("skeleton", &twisted);
    let (code, skeleton, _) = run(&["hstar", twisted_file.to_str().unwrap()]);
    assert_eq!(code, 0);
    let skeleton_file = temp_file("skeleton-out", &skeleton);
    let (code, stdout, _) = run(&[
        "iso",
        skeleton_file.to_str().unwrap(),
        &fixture("fig1.json"),
    ]);
    assert_eq!(code, 0, "the skeleton of the full twist is the base");
    assert!(stdout.starts_with("isomorphic: yes"));
    let (code, fstar_out, _) = run(&["fstar", twisted_file.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(fstar_out.contains("\"filter\": "));
    std::fs::remove_file(twisted_file).ok();
    std::fs::remove_file(skeleton_file).ok();
}

#[test]
fn enumerate_is_repeatable_and_counts() {
    let args = [
        "enumerate",
        "--base",
        &fixture("boolean2.json"),
        "--laws",
        "mH",
        "--format",
        "machine",
    ];
    let (code, first, _) = run(&args);
    assert_eq!(code, 0);
    let (_, second, _) = run(&args);
    assert_eq!(first, second);
    assert!(first.ends_with("{\"count\": 8, \"truncated\": false}\n"));
    assert_eq!(first.lines().count(), 9);
    let (code, limited, _) = run(&[
        "enumerate",
        "--base",
        &fixture("boolean2.json"),
        "--laws",
        "mH",
        "--limit",
        "3",
        "--format",
        "machine",
    ]);
    assert_eq!(code, 0);
    assert!(limited.ends_with("{\"count\": 3, \"truncated\": true}\n"));
}

#[test]
fn catalog_matches_the_golden_file() {
    let golden = std::fs::read_to_string(fixture("catalog_max6.txt")).unwrap();
    let (code, stdout, _) = run(&["catalog", "--max-size", "6"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, golden);
}

#[test]
fn duality_commands_compose() {
    let (code, space, _) = run(&["dual", &fixture("fig1.json")]);
    assert_eq!(code, 0);
    let space_file = temp_file("space", &space);
    let (code, algebra, _) = run(&["algebra-of-space", space_file.to_str().unwrap()]);
    assert_eq!(code, 0);
    let algebra_file = temp_file("algebra", &algebra);
    let (code, stdout, _) =
        run(&["iso", algebra_file.to_str().unwrap(), &fixture("fig1.json")]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("isomorphic: yes"));
    let (code, stdout, _) = run(&["roundtrip", &fixture("fig1.json")]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "algebra round trip verified: 5 elements, 3 spectrum points\n");
    let (code, mne, _) = run(&["mne", &fixture("fig1.json"), "--filter", "b"]);
    assert_eq!(code, 0);
    let mne_file = temp_file("mne", &mne);
    let (code, stdout, _) = run(&["check", mne_file.to_str().unwrap(), "--law", "all"]);
    assert_eq!(code, 0, "the kite's dense filter satisfies every space law: {stdout}");
    std::fs::remove_file(space_file).ok();
    std::fs::remove_file(algebra_file).ok();
    std::fs::remove_file(mne_file).ok();
}

#[test]
fn quotient_and_primefilters_read_plain_heyting_documents() {
    let (code, stdout, _) =
        run(&["quotient", &fixture("c3.json"), "--filter", "dense"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("\"kind\": \"heyting\""));
    let (code, stdout, _) =
        run(&["primefilters", &fixture("c3.json"), "--format", "machine"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "[\"⊤\"]\n[\"m\", \"⊤\"]\n");
}

#[test]
fn dash_reads_the_document_from_stdin() {
    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_twistlab"))
        .args(["validate", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .expect("binary runs");
    let doc = std::fs::read_to_string(fixture("c3.json")).unwrap();
    child.stdin.take().unwrap().write_all(doc.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "ok: heyting with 3 elements\n");
}

#[test]
fn a_vanished_reader_does_not_panic() {
    use std::io::Write;
    // Closing stdout before feeding stdin guarantees the write side sees a
    // closed pipe once the document is processed.
    let mut child = Command::new(env!("CARGO_BIN_EXE_twistlab"))
        .args(["twist", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .stderr(std::process::Stdio::piped())
        .spawn()
        .expect("binary runs");
    drop(child.stdout.take());
    let doc = std::fs::read_to_string(fixture("fig1.json")).unwrap();
    child.stdin.take().unwrap().write_all(doc.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0), "broken pipe is not a failure");
    assert_eq!(String::from_utf8(out.stderr).unwrap(), "");
}
