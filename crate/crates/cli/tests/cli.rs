use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_halfturn-ice"))
        .args(args)
        .env_remove("HALFTURN_ICE_MAX_STATES")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

#[test]
fn enumerate_census_splits_central_entry() {
    let o = run(&["enumerate", "--order", "3", "--class", "ht", "--census"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["schemaVersion"], 1);
    assert_eq!(v["total"], "3");
    assert_eq!(v["split"]["plus"], "2");
    assert_eq!(v["split"]["minus"], "1");
}

#[test]
fn counts_in_every_format() {
    let o = run(&["enumerate", "-n", "5"]);
    assert_eq!(json(&o)["count"], 429);
    let o = run(&["enumerate", "-n", "5", "--format", "text"]);
    assert_eq!(stdout(&o), "429\n");
    let o = run(&["enumerate", "-n", "4", "--class", "ht", "--format", "csv"]);
    assert_eq!(stdout(&o), "order,class,count\n4,ht,10\n");
}

#[test]
fn closed_forms() {
    let o = run(&["formulas", "--family", "ht-odd", "--order", "7", "--format", "text"]);
    assert_eq!(stdout(&o), "588\n");
    let o = run(&["formulas", "--family", "ht-odd-minus", "-n", "7", "--format", "text"]);
    assert_eq!(stdout(&o), "252\n");
    let o = run(&["formulas", "--family", "asm", "-n", "4", "--refined", "--format", "text"]);
    assert_eq!(stdout(&o), "7 14 14 7\n");
}

#[test]
fn genfunc_brute_agrees() {
    let o = run(&["genfunc", "-n", "5", "--class", "ht", "--brute"]);
    assert!(o.status.success());
    assert_eq!(json(&o)["equal"], true);
}

#[test]
fn partition_symbolic_and_evaluated() {
    let o = run(&["partition", "--model", "dwbc", "-n", "2"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["model"]["stateCount"], "2");
    assert!(v["value"]["terms"].as_array().unwrap().len() > 1);

    let args = ["partition", "--m", "1", "--model", "ht-odd", "--assign", "a=zeta", "--assign", "x1=2", "--assign", "x2=3",
        "--assign", "y1=1/2", "--assign", "y2=5", "--format", "text"];
    let direct = run(&args);
    assert!(direct.status.success(), "{}", String::from_utf8_lossy(&direct.stderr));
    let mut sym_args = args.to_vec();
    sym_args.insert(1, "--symbolic");
    let partial = run(&sym_args);
    assert_eq!(stdout(&direct), stdout(&partial));
}

#[test]
fn det_compares_with_state_sum() {
    let o = run(&["det", "--model", "ht-odd", "--m", "2", "--points", "3"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["results"].as_array().unwrap().len(), 3);
    assert_eq!(v["seed"], 42);
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        &["verify", "--suite", "theorem3", "--seed", "9"][..],
        &["det", "--model", "dwbc", "-n", "3", "--points", "2"][..],
        &["enumerate", "-n", "5", "--class", "ht", "--census"][..],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn verify_reports_one_line_per_suite() {
    let o = run(&["verify", "--suite", "ybe"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<&str> = std::str::from_utf8(&o.stdout).unwrap().lines().collect();
    assert_eq!(lines.len(), 1);
    let v: Value = serde_json::from_str(lines[0]).unwrap();
    assert_eq!(v["suiteId"], "ybe");
    assert_eq!(v["status"], "pass");
    assert_eq!(v["schemaVersion"], 1);
    assert!(v.get("elapsedMs").is_none());
}

#[test]
fn verify_all_passes() {
    let o = run(&["verify", "--all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let n = stdout(&o).lines().count();
    let list = run(&["verify", "--list", "--format", "text"]);
    assert_eq!(n, stdout(&list).lines().count());
}

#[test]
fn failing_verification_exits_one() {
    let o = run(&["verify", "--suite", "factorization", "--max-states", "3"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["status"], "fail");
    assert!(v["witness"]["error"].is_string());
}

#[test]
fn environment_overrides_the_guard() {
    let o = Command::new(env!("CARGO_BIN_EXE_halfturn-ice"))
        .args(["partition", "-n", "4"])
        .env("HALFTURN_ICE_MAX_STATES", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("exceeds"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "--suite", "no-such-suite"][..],
        &["partition", "--model", "ht-even", "-n", "3"][..],
        &["frobnicate"][..],
        &["enumerate"][..],
        &["partition", "-n", "2", "--assign", "x1"][..],
        &["enumerate", "-n", "3", "--max-states", "0"][..],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn report_merges_stdin() {
    let a = stdout(&run(&["verify", "--suite", "four-enum"]));
    let b = stdout(&run(&["verify", "--suite", "ybe"]));
    let mut child = Command::new(env!("CARGO_BIN_EXE_halfturn-ice"))
        .args(["report", "--format", "csv"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(format!("{a}{b}").as_bytes()).unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("suiteId,status,checksRun\nybe,pass,"), "{text}");
    assert!(text.contains("four-enum,pass,"));
}

#[test]
fn out_writes_a_file() {
    let path = std::env::temp_dir().join(format!("halfturn-ice-cli-{}.json", std::process::id()));
    let o = run(&["formulas", "-n", "6", "--out", path.to_str().unwrap()]);
    assert!(o.status.success() && o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v["count"], "7436");
    assert_eq!(v["command"], "formulas");
}
