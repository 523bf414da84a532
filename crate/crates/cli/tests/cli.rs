use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_emptytet")).args(args).output().expect("spawn emptytet")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn classify_motivating_example() {
    let v = json(&["classify", "0", "0", "0", "1", "0", "0", "0", "1", "0", "1", "1", "5", "--json"]);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["empty"], true);
    assert_eq!(v["clean"], true);
    assert_eq!(v["volume6"], 5);
    assert_eq!(v["canonical_form"], serde_json::json!({"a": 1, "b": 1, "c": 5, "d": 4}));
    assert_eq!(v["planes"], serde_json::json!(["x=1", "y=1"]));
    assert_eq!(v["interior_points"].as_array().unwrap().len(), 4);
}

#[test]
fn classify_clean_nonempty_with_oracle() {
    let v = json(&["classify", "0", "0", "0", "1", "0", "0", "0", "1", "0", "2", "3", "7", "--json", "--oracle"]);
    assert_eq!(v["empty"], false);
    assert_eq!(v["clean"], true);
    assert_eq!(v["oracle"]["agrees"], true);
    assert_eq!(v["canonical_form"]["c"], 7);
}

#[test]
fn classify_negative_coordinates() {
    let v = json(&["classify", "0", "0", "0", "1", "0", "0", "0", "1", "0", "-3", "-4", "-5", "--json", "--oracle"]);
    assert_eq!(v["volume6"], 5);
    assert_eq!(v["oracle"]["agrees"], true);
}

#[test]
fn classify_degenerate_is_input_error() {
    let o = run(&["classify", "0", "0", "0", "1", "0", "0", "2", "0", "0", "0", "0", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("degenerate"));
}

#[test]
fn malformed_input_is_usage_error() {
    assert_eq!(run(&["classify", "1", "2", "3"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "a", "b"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "0"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "3", "--json", "--csv"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["nosuchcommand"]).status.code(), Some(2));
}

#[test]
fn classify_from_file() {
    let dir = std::env::temp_dir().join(format!("emptytet-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t.txt");
    std::fs::write(&path, "# T(1,2,5)\n0 0 0\n1 0 0\n0 1 0\n1 2 5\n").unwrap();
    let v = json(&["classify", "--file", path.to_str().unwrap(), "--json"]);
    assert_eq!(v["empty"], true);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn normalize_sheared_input() {
    let v = json(&["normalize", "(0,0,0),(1,0,0),(0,1,0),(5,3,2)", "--json", "--check"]);
    assert_eq!(v["form"], serde_json::json!({"a": 1, "b": 1, "c": 2, "d": 1}));
    assert_eq!(v["check"], true);
    assert_eq!(v["map"]["matrix"], serde_json::json!([[1, 0, -2], [0, 1, -1], [0, 0, 1]]));
}

#[test]
fn normalize_sheared_copy_keeps_volume() {
    // (x, y, z) -> (x + 2y, y + z, z) applied to T(1,2,5)
    let v = json(&["normalize", "0 0 0 1 0 0 2 1 0 5 7 5", "--json", "--check"]);
    assert_eq!(v["form"]["c"], 5);
    assert_eq!(v["check"], true);
}

#[test]
fn normalize_rejects_non_clean() {
    let o = run(&["normalize", "0 0 0 2 0 0 0 1 0 0 0 1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not normalizable (non-clean)"));
}

#[test]
fn enumerate_small_c() {
    let pairs = |c: &str| -> Vec<(i64, i64)> {
        let v = json(&["enumerate", c, "--json"]);
        v["rows"].as_array().unwrap().iter().map(|r| (r["a"].as_i64().unwrap(), r["b"].as_i64().unwrap())).collect()
    };
    assert_eq!(pairs("1"), vec![(0, 0)]);
    assert_eq!(pairs("2"), vec![(1, 1)]);
    assert_eq!(pairs("3"), vec![(1, 1), (1, 2), (2, 1)]);

    let csv = stdout(&run(&["enumerate", "3", "--csv"]));
    assert_eq!(csv, "a,b,c,d,clauses\n1,1,3,2,a=1;b=1\n1,2,3,1,a=1;d=1\n2,1,3,1,b=1;d=1\n");
}

#[test]
fn points_output() {
    assert_eq!(stdout(&run(&["points", "1", "1", "2"])), "1 1 1\n");
    let v = json(&["points", "3", "4", "7", "--json"]);
    let pts = v["points"].as_array().unwrap();
    assert_eq!(pts.len(), 6);
    for p in pts {
        let p: Vec<i64> = p.as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect();
        assert_eq!(p[0] + p[1] - p[2], 1);
    }
    assert_eq!(run(&["points", "2", "1", "4"]).status.code(), Some(2));
}

#[test]
fn verify_suites_exit_zero() {
    for args in [
        &["verify", "--suite", "white", "--max-c", "10"][..],
        &["verify", "--suite", "fn", "--max-c", "100"][..],
        &["verify", "--suite", "coplanar", "--max-c", "25"][..],
        &["verify", "--suite", "normalize", "--max-c", "6", "--trials", "50", "--seed", "3"][..],
        &["verify", "--suite", "witness", "--max-c", "20"][..],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
        assert!(stdout(&o).starts_with("[PASS]"));
    }
}

#[test]
fn verify_json_is_byte_stable() {
    let args = ["verify", "--suite", "normalize", "--suite", "white", "--max-c", "6", "--trials", "40", "--seed", "9", "--json"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["reports"].as_array().unwrap().len(), 2);
    assert_eq!(v["reports"][1]["seed"], 9);
}

#[test]
fn classify_output_is_byte_stable() {
    let args = ["classify", "3", "1", "4", "1", "5", "9", "2", "6", "5", "3", "5", "8", "--json", "--oracle"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
    assert!(a.stdout.ends_with(b"\n"));
}
