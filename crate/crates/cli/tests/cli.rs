use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn revpref(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_revpref"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn error_kind(out: &Output) -> String {
    let err: Value = serde_json::from_slice(&out.stderr).expect("stderr is JSON");
    err["error"]["kind"].as_str().unwrap().to_string()
}

fn scratch_dir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("revpref-cli-{}-{name}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn fixture_file(dir: &Path, name: &str) -> String {
    let out = revpref(&["generate", "--fixture", name]);
    assert!(out.status.success());
    write(dir, &format!("{name}.json"), &stdout(&out))
}

#[test]
fn generated_fixture_is_the_library_fixture() {
    let out = revpref(&["generate", "--fixture", "example1"]);
    assert!(out.status.success());
    let expected = revpref::generators::fixtures::example1()
        .dataset
        .to_json_string();
    assert_eq!(stdout(&out), expected + "\n");
}

#[test]
fn analyze_example1() {
    let dir = scratch_dir("e1");
    let out = revpref(&["analyze", &fixture_file(&dir, "example1")]);
    assert!(out.status.success());
    let r = json(&out);
    assert_eq!(r["verdicts"]["tau"]["status"], "satisfied");
    assert_eq!(r["verdicts"]["rho"]["status"], "violated");
    assert_eq!(
        r["verdicts"]["rho"]["witnesses"][0],
        serde_json::json!({"x": "d", "y": "a", "B": ["b", "k"], "direction": "backward"})
    );
    assert_eq!(r["preference"]["strict_is_preference"], true);
    assert_eq!(r["rationalization"]["status"], "violated");
    assert_eq!(
        r["rationalization"]["failures"][0],
        serde_json::json!({"menu": ["a", "b", "k", "d"], "expected": ["a"], "actual": ["a", "d"]})
    );
}

#[test]
fn analyze_example2() {
    let dir = scratch_dir("e2");
    let out = revpref(&["--json", "analyze", &fixture_file(&dir, "example2")]);
    assert!(out.status.success());
    let r = json(&out);
    assert_eq!(r["verdicts"]["tau"]["status"], "violated");
    assert_eq!(
        r["verdicts"]["tau"]["witnesses"][0],
        serde_json::json!({"x": "a", "z": "b", "y": "k"})
    );
    assert_eq!(r["verdicts"]["rho"]["status"], "satisfied");
    assert_eq!(r["rationalization"]["status"], "satisfied");
    assert_eq!(r["preference"]["strict_is_preference"], false);
}

#[test]
fn text_rendering() {
    let dir = scratch_dir("text");
    let out = revpref(&["analyze", "--text", &fixture_file(&dir, "example1")]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("tau      satisfied"));
    assert!(text.contains("first witness: x=d y=a B={b,k} direction=backward"));
    assert!(text.contains("menu {a,b,k,d}: undominated {a}, chosen {a,d}"));
}

#[test]
fn single_observation_is_never_violated() {
    let dir = scratch_dir("single");
    let path = write(
        &dir,
        "one.json",
        r#"{"alternatives":["a","b","c"],"observations":[{"menu":["a","b"],"choice":["a"]}]}"#,
    );
    let r = json(&revpref(&["analyze", &path]));
    for axiom in ["tau", "rho", "warp", "v_axiom", "delta"] {
        assert_ne!(r["verdicts"][axiom]["status"], "violated", "{axiom}");
    }
}

#[test]
fn completion_policy_flag() {
    let dir = scratch_dir("complete");
    let path = fixture_file(&dir, "example1");
    let r = json(&revpref(&["analyze", "--complete=full-menu", &path]));
    assert_eq!(r["dataset"]["completion"], "full-menu");
    assert_eq!(r["verdicts"]["v_axiom"]["status"], "violated");
    let out = revpref(&["analyze", "--complete", "fail", &path]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(error_kind(&out), "IncompleteData");
}

#[test]
fn ingestion_errors_are_machine_readable() {
    let dir = scratch_dir("bad");
    let path = write(
        &dir,
        "bad.json",
        r#"{"alternatives":["a","b"],"observations":[
            {"menu":["a","b"],"choice":["a"]},{"menu":["b","a"],"choice":["b"]}]}"#,
    );
    let out = revpref(&["analyze", &path]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(error_kind(&out), "DuplicateConflict");

    let out = revpref(&["analyze", dir.join("missing.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(error_kind(&out), "Io");
}

#[test]
fn usage_errors_exit_with_one() {
    let out = revpref(&["verify", "--claim", "theorem2", "--n", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(error_kind(&out), "Usage");
    assert_eq!(revpref(&["frobnicate"]).status.code(), Some(1));
    assert!(revpref(&["--help"]).status.success());
}

#[test]
fn verify_small_universes() {
    let out = revpref(&["verify", "--claim", "theorem1", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["instances"], 189);
    assert_eq!(r["satisfying"], 13);
    assert_eq!(r["verified"], true);

    let r = json(&revpref(&["verify", "--claim", "prop-tau", "--n", "1"]));
    assert_eq!(r["instances"], 1);

    let r = json(&revpref(&["verify", "--claim", "delta", "--n", "3"]));
    assert_eq!(r["example2_confirmed"], true);
}

#[test]
fn verify_sharded_matches_sequential() {
    let seq = json(&revpref(&["verify", "--claim", "warp", "--n", "3"]));
    let par = json(&revpref(&[
        "verify", "--claim", "warp", "--n", "3", "--shards", "4",
    ]));
    assert_eq!(seq["instances"], par["instances"]);
    assert_eq!(seq["satisfying"], par["satisfying"]);
    let mut total = 0;
    for k in 0..4 {
        let shard = k.to_string();
        let out = revpref(&[
            "verify", "--claim", "warp", "--n", "3", "--shards", "4", "--shard", &shard,
        ]);
        assert!(out.status.success());
        let r = json(&out);
        assert_eq!(r["complete"], false);
        total += r["instances"].as_u64().unwrap();
    }
    assert_eq!(total, 189);
}

#[test]
fn verify_refuses_five_without_slicing() {
    let out = revpref(&["verify", "--claim", "theorem1", "--n", "5"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(error_kind(&out), "UniverseTooLarge");
    // a thin slice of the n = 5 enumeration
    let out = revpref(&[
        "verify",
        "--claim",
        "theorem1",
        "--n",
        "5",
        "--shards",
        "1000000000000000000",
        "--shard",
        "7",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(json(&out)["instances"].as_u64().unwrap() > 0);
}

#[test]
fn generate_samples_reproducibly() {
    let args = ["generate", "--n", "3", "--seed", "7", "--count", "2"];
    let first = stdout(&revpref(&args));
    assert_eq!(first, stdout(&revpref(&args)));
    let lines: Vec<&str> = first.lines().collect();
    assert_eq!(lines.len(), 2);
    for line in lines {
        let data = revpref::ingest_dataset(line).unwrap();
        assert!(revpref::ChoiceData::is_total(&data));
    }
}

#[test]
fn generate_from_preference_passes_everything() {
    let dir = scratch_dir("pref");
    let out = revpref(&["generate", "--from-preference", "a>b~k>d"]);
    assert!(out.status.success());
    let path = write(&dir, "pref.json", &stdout(&out));
    let r = json(&revpref(&["analyze", &path]));
    for axiom in ["tau", "rho", "warp", "v_axiom", "delta"] {
        assert_eq!(r["verdicts"][axiom]["status"], "satisfied", "{axiom}");
    }
    let out = revpref(&["generate", "--from-preference", "a>b>a"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn generate_range_into_directory() {
    let dir = scratch_dir("range");
    let out_dir = dir.join("out");
    let out = revpref(&[
        "generate",
        "--n",
        "2",
        "--range",
        "0..3",
        "--out",
        out_dir.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let mut names: Vec<String> = fs::read_dir(&out_dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(names, ["index-0.json", "index-1.json", "index-2.json"]);
    let out = revpref(&["generate", "--n", "2", "--range", "0..4"]);
    assert_eq!(error_kind(&out), "IndexOutOfRange");
}
