use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fredholm-witness"))
}

#[test]
fn index_csv_on_stdout() {
    let out = bin().args(["index", "--format", "csv", "--min-cut", "-2", "--max-cut", "2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("N,dim_plus,dim_minus,index"));
    assert!(text.contains("\n-2,0,2,-2\n"));
    assert_eq!(text.lines().count(), 6);
}

#[test]
fn interval_json_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("interval.json");
    let status = bin()
        .args(["interval", "--grid", "50,100", "--sizes", "16,32", "--out"])
        .arg(&path)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(value["model"], "interval");
    assert_eq!(value["witness"]["verdict"], "pass");
    assert_eq!(value["sizes"], serde_json::json!([16, 32]));
    assert_eq!(value["sv"][0].as_array().unwrap().len(), 16);
}

#[test]
fn disc_csv() {
    let out = bin().args(["disc", "--grid", "100,1000", "--format", "csv"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("n,L,K_rows,"));
    assert_eq!(text.lines().count(), 3);
}

#[test]
fn failing_verdict_exits_with_one() {
    // At m = 1, 2 the pairings have not started to decay.
    let out = bin().args(["interval", "--grid", "1,2", "--format", "csv"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout).unwrap().lines().nth(1).unwrap().ends_with(",fail"));
}

#[test]
fn short_truncation_is_covered_by_the_tail() {
    let out = bin()
        .args(["interval", "--grid", "100,200", "--trunc-factor", "1", "--trunc-floor", "1", "--format", "csv"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stderr).unwrap().contains("warning"));
}

#[test]
fn configuration_errors_exit_with_two() {
    for args in [
        vec!["sweep", "--sizes", "64,32"],
        vec!["sweep", "--model", "disc", "--sizes", "6"],
        vec!["interval", "--grid", "0"],
        vec!["interval", "--trunc-factor", "0"],
        vec!["index", "--min-cut", "3", "--max-cut", "1"],
        vec!["frobnicate"],
    ] {
        let out = bin().args(&args).output().unwrap();
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}
