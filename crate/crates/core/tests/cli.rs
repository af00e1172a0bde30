use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tangle3")).args(args).output().unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

fn stdout(args: &[&str]) -> String {
    String::from_utf8(run(args).stdout).unwrap()
}

#[test]
fn equiv_exit_codes() {
    assert_eq!(code(&["equiv", "", ""]), 0);
    assert_eq!(code(&["equiv", "s5 s3 s1 s2^-1 s3 s1", ""]), 1);
    assert_eq!(code(&["equiv", "s5 s1 s0^-1 s3 s1 s5", "s1 s3 s2^-1 s1 s2^-1 s1 s2 s3"]), 0);
    assert_eq!(code(&["--strict", "equiv", "s5 s1 s0^-1 s3 s1 s5", "s1 s3 s2^-1 s1 s2^-1 s1 s2 s3"]), 0);
    assert_eq!(code(&["equiv", "s7", ""]), 2);
    assert_eq!(code(&["equiv", "s1^0", ""]), 2);
    assert_eq!(code(&["equiv", "s1"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
}

#[test]
fn weights_json_is_the_first_example_endpoint() {
    let out = stdout(&["weights", "s5 s3 s1 s2^-1 s3 s1", "--curve", "e2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(
        v,
        serde_json::json!({"w": {"15": 4, "34": 3, "35": 1, "56": 3}, "W": {"15": 1, "16": 3, "35": 4, "45": 3}})
    );
}

#[test]
fn dehn_json() {
    let out = stdout(&["dehn", "s5 s3 s1 s2^-1 s3 s1", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["p"], serde_json::json!([4, 8, 4]));
    assert_eq!(v["q"], serde_json::json!([0, 1, 0]));
    assert_eq!(v["t"], serde_json::json!([-1, -1, 0]));
    assert_eq!(v["x"]["12"], 8);
}

#[test]
fn equiv_json_report() {
    let out = stdout(&["--json", "--trace", "equiv", "s1 s2", "s1 s2"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["overall"], "isotopic");
    assert_eq!(v["words"]["f"], "s1 s2");
    assert!(v["curves"].as_array().unwrap().len() >= 2);
}

#[test]
fn other_subcommands() {
    assert_eq!(stdout(&["normalize", "s1 s2"]).trim(), "s1 s2");
    assert!(stdout(&["oracle", "s1", "--curve", "e2"]).contains("no disk"));
    assert!(stdout(&["reduce", "s2^-1 s1^-1 s2^-2 s1^-1 s2", "--curve", "e1"]).contains("bounds"));
    assert_eq!(code(&["weights", "s1", "--curve", "e4"]), 2);
    let st = run(&["selftest"]);
    assert_eq!(st.status.code(), Some(0), "{}", String::from_utf8_lossy(&st.stdout));
}
