use std::path::PathBuf;
use std::process::{Command, Output, Stdio};
use std::io::Write;

fn data() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data")
}

fn fincat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fincat"))
        .args(args)
        .current_dir(data())
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn validate_term() {
    let o = fincat(&["cat", "validate", "term.json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("1 objects, 1 arrows"));
}

#[test]
fn pair_singleton_is_not_flat() {
    let o = fincat(&["flat", "check", "pair_bad.json"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("condition (iii)"));
    let o = fincat(&["flat", "check", "pair_bad.json", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["condition"], "iii");
    assert_eq!(v["witness"]["u"], "f");
    assert_eq!(v["witness"]["v"], "g");
}

#[test]
fn poset_site_is_rigid() {
    let o = fincat(&["site", "rigid", "poset_ab.json", "topo.json", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["irreducibles"], serde_json::json!(["a"]));
    assert_eq!(v["rigid"], true);
}

#[test]
fn input_errors_exit_2() {
    let o = fincat(&["cat", "validate", "missing.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Input"));
    assert_eq!(fincat(&["frob", "nicate"]).status.code(), Some(2));
    let o = fincat(&["site", "rigid", "poset_ab.json", "@-"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn budget_exceeded_exits_3() {
    let o = fincat(&["setfun", "nat", "pair_bad.json", "pair_bad.json", "--budget", "0"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn stdin_reference() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fincat"))
        .args(["karoubi", "complete", "@-"])
        .current_dir(data())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    let text = std::fs::read(data().join("idem.json")).unwrap();
    child.stdin.take().unwrap().write_all(&text).unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("`e` does not split"));
}

#[test]
fn selftest_is_deterministic() {
    let a = fincat(&["--selftest", "--seed", "11", "--json"]);
    let b = fincat(&["--selftest", "--seed", "11", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
