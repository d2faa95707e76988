use std::process::{Command, Output};

fn cellring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cellring")).args(args).env_remove("CELLRING_CACHE").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn kl_examples() {
    for (y, w, want) in [("", "012012", "1"), ("2", "2", "1"), ("3", "012012", "0")] {
        let o = cellring(&["kl", y, w]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).trim(), want, "P_{{{y},{w}}}");
    }
}

#[test]
fn kl_json_output() {
    let o = cellring(&["--format", "json", "kl", "", "012012"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["P"], serde_json::json!([1]));
    assert_eq!(v["w"], "012012");
}

#[test]
fn gamma_of_base_element() {
    let o = cellring(&["gamma", "012012", "012012"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "012012\t1");
}

#[test]
fn gamma_csv_has_header() {
    let o = cellring(&["--format", "csv", "gamma", "012012", "012012"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,y,z,gamma"));
    assert_eq!(lines.next(), Some("012012,012012,012012,1"));
}

#[test]
fn gamma_outside_the_cell_is_an_error() {
    let o = cellring(&["gamma", "", "012012"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

#[test]
fn malformed_word_exits_with_two() {
    let o = cellring(&["kl", "01x", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("malformed"));
}

#[test]
fn unknown_suite_is_a_usage_error() {
    assert_eq!(cellring(&["verify", "nonsense"]).status.code(), Some(2));
}

#[test]
fn verify_suites_pass() {
    for suite in ["coxeter", "repring", "eta"] {
        let o = cellring(&["verify", suite]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", stdout(&o));
        assert!(stdout(&o).lines().all(|l| l.contains("PASS")));
    }
    let o = cellring(&["--format", "json", "verify", "coxeter"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["failures"], serde_json::json!([]));
}

#[test]
fn pi_and_cells() {
    let o = cellring(&["pi", "012012"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("G012"));
    let o = cellring(&["cells"]);
    assert_eq!(stdout(&o).lines().count(), 24);
    assert!(stdout(&o).starts_with("G012\t"));
}

#[test]
fn dictionary_rows() {
    let o = cellring(&["--max-len", "14", "dictionary"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("word,left_cell,right_cell,i,j,eps,irr"));
    assert!(text.contains("012012,G012,G012,0,0,0,"));
}

#[test]
fn cache_file_round_trip() {
    let dir = std::env::temp_dir().join(format!("cellring-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("kl.jsonl");
    let p = path.to_str().unwrap();
    let first = cellring(&["--cache", p, "kl", "", "0120123"]);
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("{\"format\":1,\"type\":\"B3~\"}"));
    let second = cellring(&["--cache", p, "kl", "", "0120123"]);
    assert_eq!(stdout(&first), stdout(&second));
    std::fs::write(&path, "not json\n").unwrap();
    assert_eq!(cellring(&["--cache", p, "kl", "", "2"]).status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn zero_bounds_are_rejected() {
    assert_eq!(cellring(&["--max-len", "0", "cells"]).status.code(), Some(2));
    assert_eq!(cellring(&["--threads", "0", "cells"]).status.code(), Some(2));
}
