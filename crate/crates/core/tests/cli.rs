use std::process::{Command, Output};

use zmgroup::cli::run_with;
use zmgroup::verifier::ReportRecord;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("zmgroup").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn binary(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zmgroup"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn check_params_exit_codes() {
    let (code, out, _) = run(&["check-params", "3", "2", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("valid: |G| = 6"));

    let (code, out, _) = run(&["check-params", "4", "2", "3"]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL  gcd(m,n)=2 ≠ 1"));

    assert_eq!(run(&["check-params", "0", "2", "1"]).0, 2);
    assert_eq!(run(&["check-params", "3", "x", "1"]).0, 2);
    assert_eq!(run(&["check-params", "3", "2"]).0, 2);
    // r is reduced mod m
    assert_eq!(run(&["check-params", "3", "2", "-1"]).0, 0);
}

#[test]
fn usage_errors() {
    assert_eq!(run(&[]).0, 2);
    assert_eq!(run(&["bogus"]).0, 2);
    assert_eq!(run(&["verify", "--format", "xml"]).0, 2);
    assert_eq!(run(&["verify", "--families", "cyclic,nope"]).0, 2);
    assert_eq!(run(&["verify", "--max-order", "0"]).0, 2);
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("check-params"));
}

#[test]
fn lattice_table_and_footer() {
    let (code, out, _) = run(&["lattice", "3", "2", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 2 + 6 + 1);
    assert_eq!(out.lines().last(), Some("S = 6 = |G|"));

    let (code, _, err) = run(&["lattice", "4", "2", "3"]);
    assert_eq!(code, 1);
    assert!(err.contains("invalid"));
}

#[test]
fn lattice_jsonl_and_csv() {
    let (code, out, _) = run(&["lattice", "5", "4", "2", "--format", "jsonl", "--elements"]);
    assert_eq!(code, 0);
    let rows: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let footer = rows.last().unwrap();
    assert_eq!(footer["s"], 20);
    assert_eq!(footer["equality"], true);
    for row in &rows[..rows.len() - 1] {
        let members = row["elements"].as_array().unwrap();
        assert_eq!(members.len() as u64, row["order"].as_u64().unwrap());
    }
    let phi_total: u64 = rows[..rows.len() - 1].iter().map(|r| r["phi"].as_u64().unwrap()).sum();
    assert_eq!(phi_total, 20);

    let (code, out, _) = run(&["lattice", "3", "2", "2", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("m1,n1,s,order,cyclic,phi,elements"));
    assert_eq!(lines.next(), Some("1,1,0,6,false,0,"));
}

#[test]
fn sfun_outputs() {
    let (code, out, _) = run(&["sfun", "dicyclic:2"]);
    assert_eq!(code, 0);
    assert!(out.contains("S(G)    14"));
    assert!(out.contains("strict: S(G) = 14 > |G| = 8"));

    let (code, out, _) = run(&["sfun", "zm:3,2,2", "--format", "jsonl", "--subgroups"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    let rec: ReportRecord = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!((rec.order, rec.s, rec.formula_s), (6, 6, Some(6)));
    assert_eq!(lines.count(), 6);

    let (code, out, _) = run(&["sfun", "symmetric:3", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(out.lines().nth(1).unwrap().starts_with("symmetric:3,symmetric,6,6,0,6,true,true,true,"));
}

#[test]
fn sfun_error_codes() {
    assert_eq!(run(&["sfun", "cyclic:0"]).0, 2);
    assert_eq!(run(&["sfun", "widget:3"]).0, 2);
    assert_eq!(run(&["sfun", "zm:4,2,3"]).0, 1);
    let (code, _, err) = run(&["sfun", "cyclic:6000"]);
    assert_eq!(code, 3);
    assert!(err.contains("cap"));
}

#[test]
fn verify_cap_exit() {
    assert_eq!(run(&["verify", "--max-order", "100000"]).0, 3);
}

#[test]
fn verify_jsonl_round_trip_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.jsonl");
    let path_str = path.to_str().unwrap();
    let (code, out, err) = run(&[
        "verify", "--max-order", "24", "--families", "zm,dicyclic", "--format", "jsonl", "--out", path_str,
    ]);
    assert_eq!(code, 0, "{err}");
    assert!(err.contains("violations: 0"));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), out);

    let records: Vec<ReportRecord> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(records.windows(2).all(|w| w[0].label < w[1].label));
    for r in &records {
        assert!(r.ms.is_none());
        assert_eq!(serde_json::to_string(r).unwrap(), out.lines().find(|l| l.contains(&format!("\"{}\"", r.label))).unwrap());
        if r.label.starts_with("zm:") {
            assert_eq!(r.formula_s, Some(r.order));
            assert!(r.equality);
        }
    }
}

#[test]
fn verify_table_summary_on_stdout() {
    let (code, out, err) = run(&["verify", "--max-order", "12"]);
    assert_eq!(code, 0);
    assert!(err.is_empty());
    assert!(out.lines().last().unwrap().starts_with("groups checked: "));
}

#[test]
fn verify_timings_add_ms() {
    let (code, out, _) = run(&["verify", "--max-order", "6", "--format", "jsonl", "--timings"]);
    assert_eq!(code, 0);
    assert!(out.lines().all(|l| l.contains("\"ms\":")));
}

#[test]
fn binary_is_deterministic() {
    let a = binary(&["verify", "--max-order", "32", "--format", "jsonl"]);
    let b = binary(&["verify", "--max-order", "32", "--format", "jsonl", "--parallel"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(binary(&["check-params", "4", "2", "3"]).status.code(), Some(1));
    assert_eq!(binary(&["sfun", "cyclic:9999"]).status.code(), Some(3));
}
