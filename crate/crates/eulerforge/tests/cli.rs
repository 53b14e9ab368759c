//! The installed binary: exit codes, output formats, env override.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eulerforge")).args(args).env_remove("EULERFORGE_DIGITS").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_values_and_errors() {
    let o = run(&["eval", "S[1;2]"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "2.404113806319188570799476323022899981530");

    let o = run(&["eval", "func M ones 3 2"]);
    assert!(stdout(&o).starts_with("3.00604517795933754758352627775713630033"));

    let o = run(&["eval", "zeta 1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("zeta_conv"));

    assert_eq!(run(&["eval", "cot alt 2"]).status.code(), Some(3));
    assert_eq!(run(&["eval", "S[1;1]"]).status.code(), Some(2));
}

#[test]
fn digits_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_eulerforge"))
        .args(["eval", "const pi"])
        .env("EULERFORGE_DIGITS", "25")
        .output()
        .unwrap();
    assert_eq!(stdout(&o).trim(), "3.141592653589793238462643");
    let o = Command::new(env!("CARGO_BIN_EXE_eulerforge"))
        .args(["eval", "const pi"])
        .env("EULERFORGE_DIGITS", "7")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let o = run(&["verify", "--filter", "cor5.3", "--digits", "30", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for line in out.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v.to_string(), line);
    }
    assert!(out.lines().last().unwrap().contains("\"summary\""));

    assert_eq!(run(&["verify", "--filter", "ex4_big2", "--digits", "20"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "--digits", "10"]).status.code(), Some(2));

    let o = run(&["verify", "--filter", "nosuch"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("0 cases"));
}

#[test]
fn tolerance_override() {
    let strict = run(&["verify", "--filter", "ex5.10", "--digits", "20"]);
    assert_eq!(strict.status.code(), Some(1));
    let loose = run(&["verify", "--filter", "ex5.10", "--digits", "20", "--tolerance", "1e-3"]);
    assert_eq!(loose.status.code(), Some(0));
    assert_eq!(run(&["verify", "--filter", "ex5.10", "--tolerance", "-1"]).status.code(), Some(2));
}

#[test]
fn list_formats() {
    let o = run(&["list", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let ids: Vec<&str> = v.as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    assert!(ids.contains(&"eq5.9"));
    assert_eq!(v.to_string(), stdout(&o).trim());

    let o = run(&["list", "--format", "csv", "--filter", "thm3"]);
    let out = stdout(&o);
    assert!(out.starts_with("id,locator,domain\n"));
    assert!(out.lines().skip(1).all(|l| l.starts_with("thm3.")));

    assert_eq!(run(&["list", "--frobnicate"]).status.code(), Some(2));
}
