use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn corpus(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name)
}

fn xmod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_xmod"))
        .args(args)
        .env_remove("XMOD_MAX_SIZE")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn emitted_actor_checks_and_roundtrips() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("actor.xmod");
    let src = corpus("c2c2.xmod");
    let o = xmod(&["actor", src.to_str().unwrap(), "--emit", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("version 1\n"));
    match xmod::parse(&text).unwrap() {
        xmod::Document::TwoCrossed(_) => {}
        _ => panic!("expected a 2-crossed document"),
    }

    for cmd in ["check", "roundtrip"] {
        let o = xmod(&[cmd, out.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{cmd}: {}", stdout(&o));
    }
}

#[test]
fn json_report_is_machine_readable() {
    let src = corpus("c2_in_c4.xmod");
    let o = xmod(&["--json", "fder", "--invertible", src.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["command"], "fder");
    assert_eq!(v["ok"], true);
}

#[test]
fn crossed_module_commands_refuse_two_crossed_input() {
    let src = corpus("s3_group.xmod");
    for cmd in ["fder", "aut", "actor", "braided"] {
        assert_eq!(xmod(&[cmd, src.to_str().unwrap()]).status.code(), Some(2), "{cmd}");
    }
}

#[test]
fn missing_file_is_an_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let nowhere = dir.path().join("absent.xmod");
    let o = xmod(&["check", nowhere.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

#[test]
fn bad_size_cap_is_rejected() {
    let src = corpus("c2c2.xmod");
    let o = Command::new(env!("CARGO_BIN_EXE_xmod"))
        .args(["aut", src.to_str().unwrap()])
        .env("XMOD_MAX_SIZE", "lots")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn tiny_size_cap_exits_three() {
    let src = corpus("s3_conj.xmod");
    let o = Command::new(env!("CARGO_BIN_EXE_xmod"))
        .args(["braided", src.to_str().unwrap()])
        .env("XMOD_MAX_SIZE", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}
