use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_codegree-lab")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn json_lines(out: &Output) -> Vec<Value> {
    stdout(out).lines().map(|l| serde_json::from_str(l).expect("json line")).collect()
}

fn temp_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

const S3_LINE: &str = r#"{"name":"S3","degree":3,"generators":[[[0,1]],[[0,1,2]]],"expected":{"verdict":"TkPrime","k":1,"d0":3,"case":"B5"}}"#;

#[test]
fn table_of_s3() {
    let out = lab(&["table", "sym:3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("order 6"));
    assert!(text.contains("codegrees:     [1, 2, 3]"));

    let out = lab(&["--format", "json", "table", "sym:3"]);
    let v = &json_lines(&out)[0];
    assert_eq!(v["class_sizes"], serde_json::json!([1, 3, 2]));
    let sign = &v["characters"][1];
    assert_eq!(sign["degree"], 1);
    assert_eq!(sign["values"][1], serde_json::json!([0, 0, 0, 1, 0, 0]));
}

#[test]
fn trivial_group_has_a_one_by_one_table() {
    let out = lab(&["--format", "json", "table", "cyclic:1"]);
    assert_eq!(code(&out), 0);
    let v = &json_lines(&out)[0];
    assert_eq!(v["characters"].as_array().unwrap().len(), 1);
    assert_eq!(v["characters"][0]["codegree"], 1);
}

#[test]
fn table_of_psl2_7() {
    let out = lab(&["--format", "json", "table", "psl2:7"]);
    assert_eq!(code(&out), 0);
    let v = &json_lines(&out)[0];
    let degrees: Vec<u64> = v["characters"].as_array().unwrap().iter().map(|c| c["degree"].as_u64().unwrap()).collect();
    assert_eq!(degrees, [1, 3, 3, 6, 7, 8]);
}

#[test]
fn classify_reports() {
    let out = lab(&["--format", "json", "classify", "dicyclic:3"]);
    let v = &json_lines(&out)[0];
    assert_eq!(v["classification"], serde_json::json!({"verdict": "TkPrime", "k": 2, "d0": 4}));
    assert_eq!(v["theorem_case"], "B1");
    assert!(v.get("timing_ms").is_none());

    let out = lab(&["--format", "json", "classify", "elemab:3^2"]);
    let v = &json_lines(&out)[0];
    assert_eq!(v["classification"], serde_json::json!({"verdict": "TkPrime", "k": 8, "d0": 3}));
    assert_eq!(v["theorem_case"], "B3-elemab");

    let out = lab(&["--format", "json", "classify", "cyclic:9"]);
    let v = &json_lines(&out)[0];
    assert_eq!(v["classification"], serde_json::json!({"verdict": "NotTkPrime", "witness": [3, 9]}));
    assert_eq!(v["theorem_case"], "NotTkPrime-consistent");

    let out = lab(&["--timing", "--format", "json", "classify", "sym:3"]);
    assert!(json_lines(&out)[0]["timing_ms"]["total"].is_u64());
}

#[test]
fn error_exit_codes() {
    let out = lab(&["classify", "cyclic:"]);
    assert_eq!(code(&out), 2);
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
    assert_eq!(code(&lab(&["classify", "sym:4", "--prime", "7"])), 2);
    assert_eq!(code(&lab(&["--max-order", "100", "classify", "sym:5"])), 3);
}

#[test]
fn builtin_suite_passes() {
    let out = lab(&["verify-theorem"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 31);
    assert!(text.lines().all(|l| l.starts_with("PASS ")));
}

#[test]
fn tampered_suite_fails() {
    let suite = temp_file(concat!(
        r#"{"spec":"sym:4","verdict":"TkPrime","k":2,"d0":8,"case":"B1"}"#,
        "\n",
        r#"{"spec":"cyclic:4","verdict":"TkPrime","k":3,"d0":4,"case":"B1"}"#,
        "\n"
    ));
    let out = lab(&["--format", "json", "verify-theorem", suite.path().to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    let lines = json_lines(&out);
    assert_eq!(lines[0]["pass"], true);
    assert_eq!(lines[1]["pass"], false);

    let broken = temp_file("{\"spec\":\"sym:4\"\n");
    assert_eq!(code(&lab(&["verify-theorem", broken.path().to_str().unwrap()])), 2);
}

#[test]
fn empty_catalog_is_fine() {
    let cat = temp_file("# nothing here\n\n");
    let out = lab(&["scan", cat.path().to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
}

#[test]
fn scan_checks_expected_blocks() {
    let cat = temp_file(&format!("{S3_LINE}\nnot json\n"));
    let out = lab(&["--format", "json", "scan", cat.path().to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let lines = json_lines(&out);
    assert_eq!(lines.len(), 1);
    assert_eq!(lines[0]["name"], "S3");
    assert_eq!(lines[0]["dprime_n"], 0);
    assert!(String::from_utf8_lossy(&out.stderr).contains(":2: skipped"));

    let wrong = S3_LINE.replace(r#""k":1"#, r#""k":2"#);
    let cat = temp_file(&wrong);
    assert_eq!(code(&lab(&["scan", cat.path().to_str().unwrap()])), 1);
}

#[test]
fn unusable_catalogs() {
    let cat = temp_file("garbage\n{\"name\":1}\n");
    assert_eq!(code(&lab(&["scan", cat.path().to_str().unwrap()])), 5);
    assert_eq!(code(&lab(&["scan", "/nonexistent/catalog.jsonl"])), 5);
}

#[test]
fn check_properties_on_a_small_catalog() {
    let d5 = r#"{"name":"dihedral:5","degree":5,"generators":[[[0,1,2,3,4]],[[1,4],[2,3]]]}"#;
    let c4 = r#"{"name":"cyclic:4","degree":4,"generators":[[[0,1,2,3]]]}"#;
    let cat = temp_file(&format!("{S3_LINE}\n{d5}\n{c4}\n"));
    let out = lab(&["--format", "json", "check-properties", cat.path().to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let lines = json_lines(&out);
    let names: Vec<&str> = lines.iter().map(|l| l["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["S3", "dihedral:5", "cyclic:4"]);
    assert_eq!(lines[1]["properties"]["dihedral_count"], true);
    assert_eq!(lines[2]["properties"]["abelian_order_law"], true);
    assert_eq!(lines[0]["properties"]["abelian_order_law"], Value::Null);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let d5 = r#"{"name":"dihedral:5","degree":5,"generators":[[[0,1,2,3,4]],[[1,4],[2,3]]]}"#;
    let cat = temp_file(&format!("{S3_LINE}\n{d5}\n"));
    let path = cat.path().to_str().unwrap();
    let a = lab(&["--format", "json", "check-properties", path]);
    let b = lab(&["--format", "json", "check-properties", path]);
    assert_eq!(a.stdout, b.stdout);
    let a = lab(&["table", "psl2:5"]);
    let b = lab(&["table", "psl2:5"]);
    assert_eq!(a.stdout, b.stdout);
}
