use std::process::{Command, Output};

use asr_core::basis_sets::{enumerate, Filter, IntervalSet};

fn asr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_asr"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn enumerate_json_round_trips() {
    let out = asr(&[
        "enumerate",
        "--d",
        "6",
        "--filter",
        "half",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let sets: Vec<IntervalSet> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(sets, enumerate(6, Filter::Half).unwrap());
    assert!(stdout(&out).contains(r#"{"D":6,"intervals":[[1,1],[3,3],[5,5]]}"#));
}

#[test]
fn enumerate_text() {
    let out = asr(&["enumerate", "--d", "2"]);
    assert_eq!(stdout(&out), "{∅}\n{1}\n{2}\n");
}

#[test]
fn table_d2() {
    let out = asr(&["table", "--d", "2"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].ends_with("0 2 / 1 3"));
    assert!(lines[1].ends_with("0 1 / 2 3"));
}

#[test]
fn catalan_counts() {
    let out = asr(&["catalan", "--d-max", "6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("2 2 2 2 2\n"));
    assert!(text.contains("4 5 5 5 5\n"));
    assert!(text.contains("6 14 14 14 14\n"));
}

#[test]
fn symbol_pipeline() {
    let out = asr(&["symbol", "--d", "6", "--set", "[[2,2],[1,3],[6,6]]"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout(&out);
    assert!(text.contains("reduced:    {2,123}"));
    assert!(text.contains("symbol:     0 1 2 6 / 3 4 5 7"));
    assert!(text.contains("cross-check: pass"));
    let full = asr(&[
        "symbol",
        "--d",
        "4",
        "--set",
        r#"{"D":4,"intervals":[[3,3],[2,4]]}"#,
    ]);
    assert!(stdout(&full).contains("symbol:     0 2 3 / 1 4 5"));
}

#[test]
fn exceptional_check() {
    let out = asr(&["exceptional", "--size", "11", "--check"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("pass, 6 labels"));
    let e8 = asr(&["exceptional", "--size", "17"]);
    assert!(stdout(&e8).contains("E8 L'(S1) = {4480, 5670, 4536, 1680, 1400, 70, ?}"));
}

#[test]
fn dump_data_is_the_document() {
    let out = asr(&["dump-data"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["families"].as_array().unwrap().len(), 7);
    assert_eq!(stdout(&asr(&["exceptional", "--dump-data"])), stdout(&out));
}

#[test]
fn verify_passes() {
    let out = asr(&["verify", "--d-max", "6"]);
    assert!(out.status.success());
    assert!(stdout(&out).ends_with(", 0 failed\n"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(asr(&["enumerate"]).status.code(), Some(2));
    assert_eq!(asr(&["enumerate", "--d", "3"]).status.code(), Some(2));
    assert_eq!(asr(&["exceptional", "--size", "6"]).status.code(), Some(2));
    assert_eq!(
        asr(&["symbol", "--d", "4", "--set", "[[2,4]]"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        asr(&["symbol", "--d", "4", "--set", "nonsense"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn ceiling_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_asr"))
        .args(["enumerate", "--d", "6"])
        .env("ASR_D_CEILING", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("ceiling 4"));
}
