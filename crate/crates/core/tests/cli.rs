//! End-to-end tests of the `pcensus` binary: JSON schemas, exit codes and
//! output determinism.

use std::process::{Command, Output};

fn pcensus(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pcensus"))
        .args(args)
        .output()
        .expect("binary must run")
}

fn json_stdout(out: &Output) -> serde_json::Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout must be JSON")
}

#[test]
fn census_example() {
    let v = json_stdout(&pcensus(&["census", "-p", "3", "gl(2,3)"]));
    assert_eq!(v["count"], 9);
    assert_eq!(v["proportion"], "3/16");
    assert_eq!(v["order"], 48);
}

#[test]
fn bounds_example() {
    let v = json_stdout(&pcensus(&["bounds", "i(4,3)"]));
    assert_eq!(v["exact"], "640");
    assert_eq!(v["approx"], 640.0);
    let v = json_stdout(&pcensus(&["bounds", "f(3,2)"]));
    assert_eq!(v["exact"], "21");
}

#[test]
fn mp_example() {
    let v = json_stdout(&pcensus(&["mp", "-p", "2", "sym(5)"]));
    assert_eq!(v["value"], 4);
}

#[test]
fn verify_list_and_suite() {
    let out = pcensus(&["verify", "--list"]);
    assert!(out.status.success());
    let names: Vec<&str> = std::str::from_utf8(&out.stdout).unwrap().split_whitespace().collect();
    assert_eq!(names.len(), 8);
    assert!(names.contains(&"steinberg") && names.contains(&"thmF-rank1"));

    let v = json_stdout(&pcensus(&["verify", "--suite", "steinberg", "--threads", "1"]));
    assert_eq!(v["failures"], 0);
    assert_eq!(v["suites"][0]["suite"], "steinberg");
}

#[test]
fn exit_codes() {
    // usage errors → 2
    assert_eq!(pcensus(&["bounds", "zzz"]).status.code(), Some(2));
    assert_eq!(pcensus(&["construct", "frobnicate(3)"]).status.code(), Some(2));
    assert_eq!(pcensus(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(pcensus(&["census", "-p", "4", "sym(4)"]).status.code(), Some(2));
    // enumeration cap exceeded → 3
    assert_eq!(pcensus(&["construct", "sym(12)", "--cap", "1000"]).status.code(), Some(3));
}

#[test]
fn deterministic_output() {
    for args in [
        vec!["construct", "wreath(gl(1,5),sym(2))"],
        vec!["census", "-p", "2", "alt(5)"],
        vec!["bounds", "f(2,3)"],
        vec!["lemmas", "bothcases", "-q", "2", "-s", "2", "-t", "3"],
    ] {
        let a = pcensus(&args);
        let b = pcensus(&args);
        assert_eq!(a.stdout, b.stdout, "nondeterministic output for {args:?}");
    }
    // verify output is byte-deterministic apart from the elapsed timings
    let strip = |out: &Output| {
        let mut v = json_stdout(out);
        for s in v["suites"].as_array_mut().unwrap() {
            for c in s["checks"].as_array_mut().unwrap() {
                c["elapsed_ms"] = serde_json::json!(0);
            }
        }
        v
    };
    let args = ["verify", "--suite", "mp-values", "--threads", "1"];
    assert_eq!(strip(&pcensus(&args)), strip(&pcensus(&args)));
}

#[test]
fn construct_gens_roundtrip() {
    let dir = std::env::temp_dir().join("pcensus-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g.grp");
    let out = pcensus(&["construct", "gammaL1(3,2)", "--gens-out", path.to_str().unwrap()]);
    let v = json_stdout(&out);
    assert_eq!(v["order"], 21);
    let expr = format!("gens@{}", path.display());
    let v = json_stdout(&pcensus(&["census", "-p", "2", &expr]));
    assert_eq!(v["order"], 21);
}
