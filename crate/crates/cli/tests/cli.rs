use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_avoidkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json_out(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&full)).unwrap()
}

#[test]
fn count_both_agrees() {
    let text = stdout(&[
        "count", "--avoid", "123,132", "--tau", "3412", "--n", "6", "--method", "both",
    ]);
    assert!(text.contains("oracle 16  formula 16  agree"), "{text}");
    let v = json_out(&[
        "count", "--avoid", "123,132", "--tau", "3412", "--n", "6", "--method", "both",
    ]);
    let r = &v["results"][0];
    assert_eq!(r["oracle"], "16");
    assert_eq!(r["printed"], "16");
    assert_eq!(r["agree"], true);
}

#[test]
fn gf_json_matches_the_chain() {
    let v = json_out(&["gf", "--avoid", "123,132", "--tau", "3241", "--expand", "6"]);
    assert_eq!(
        v,
        json!({"num": [1, -1, 0, 1], "den": [1, -2, 0, 1], "expansion": [1, 1, 2, 4, 7, 12, 20]})
    );
}

#[test]
fn strict_disagreement_exits_two() {
    let args = [
        "count", "--avoid", "123,132", "--tau", "3421", "--n", "5", "--method", "both",
    ];
    assert_eq!(run(&args).status.code(), Some(0));
    let mut strict = args.to_vec();
    strict.push("--strict");
    let out = run(&strict);
    assert_eq!(out.status.code(), Some(2));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("oracle 10  formula 11  DISAGREE"), "{text}");
}

#[test]
fn usage_and_resource_errors_exit_one() {
    for args in [
        vec!["count", "--avoid", "12x", "--n", "3"],
        vec!["count", "--avoid", "123", "--n", "14"],
        vec!["count", "--avoid", "123", "--n", "5..2"],
        vec!["count", "--avoid", "123", "--n", "4", "--strict"],
        vec!["gf", "--avoid", "123,132"],
        vec!["classify", "--avoid", "123", "--tau", "3412"],
        vec!["verify", "--k-max", "7"],
        vec!["wilf-table", "--window", "7-11"],
        vec!["frobnicate"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert!(!err.trim().is_empty(), "{args:?} gave no message");
    }
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn output_is_deterministic_and_json_round_trips() {
    let args = [
        "count", "--avoid", "132,213", "--tau", "2341", "--n", "0..9", "--method", "both",
        "--format", "json",
    ];
    let a = stdout(&args);
    assert_eq!(a, stdout(&args));
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", a);
}

#[test]
fn csv_columns() {
    let text = stdout(&[
        "count", "--avoid", "123,132", "--tau", "3412", "--n", "4..5", "--method", "both",
        "--format", "csv",
    ]);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("T,tau,n,method,count"));
    assert_eq!(lines.next(), Some("\"123,132\",3412,4,oracle,7"));
    assert_eq!(lines.count(), 3);
}

#[test]
fn enumerate_agrees_with_count() {
    let v = json_out(&[
        "enumerate",
        "--avoid",
        "123,132",
        "--tau",
        "3412",
        "--n",
        "6",
    ]);
    assert_eq!(v["results"][0]["count"], 16);
    assert_eq!(
        v["results"][0]["permutations"].as_array().unwrap().len(),
        16
    );
}

#[test]
fn classify_reports_reduction_and_status() {
    let v = json_out(&[
        "classify",
        "--avoid",
        "321,312",
        "--tau",
        "2134",
        "--verify-to",
        "8",
    ]);
    assert_eq!(v["reduction"]["symmetry"], "complement");
    assert_eq!(v["reduction"]["tau"], "3421");
    assert_eq!(v["formula"]["status"]["discrepant_at"]["n"], 5);
    let out = run(&[
        "classify",
        "--avoid",
        "321,312",
        "--tau",
        "2134",
        "--verify-to",
        "8",
        "--strict",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_registry() {
    let text = stdout(&["verify", "--k-max", "4", "--n-max", "8"]);
    assert!(
        text.contains("({123,132}, 3421)  first at n=5: formula 11, enumeration 10"),
        "{text}"
    );
    let out = run(&["verify", "--k-max", "4", "--n-max", "8", "--strict"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn wilf_table_markdown() {
    let text = stdout(&[
        "wilf-table",
        "--window",
        "7:11",
        "--format",
        "md",
        "--jobs",
        "2",
    ]);
    assert!(text.starts_with(r"| class representative | \|C\| | formula | status |"));
    let rows = text.lines().filter(|l| l.starts_with("| ({")).count();
    assert_eq!(rows, 22);
    assert!(text.contains("| ({123,132}, 3412) | 118 | C(n,2)+1 | matches |"));
}
