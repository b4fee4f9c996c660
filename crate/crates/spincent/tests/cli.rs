use std::process::{Command, Output};

use spincent::export::MatrixSet;
use spincent::report::{Report, SCHEMA_VERSION};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spincent"))
        .args(args)
        .env_remove("SPINCENT_MAX_N")
        .output()
        .expect("binary runs")
}

fn json_report(args: &[&str]) -> (Report, i32) {
    let out = run(args);
    let report: Report = serde_json::from_slice(&out.stdout).expect("JSON report on stdout");
    (report, out.status.code().unwrap())
}

#[test]
fn dims_report_schema() {
    let (report, code) = json_report(&["dims", "--r", "9"]);
    assert_eq!(code, 0);
    assert_eq!(report.schema_version, SCHEMA_VERSION);
    assert!(report.all_pass);
    assert_eq!(report.rows.len(), 9);
    assert_eq!(report.rows[8].computed_dim, Some(16));
    assert_eq!(report.command["command"], "dims");
}

#[test]
fn centralize_csv() {
    let out = run(&["centralize", "--r", "6", "--m", "2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let headers: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(
        headers,
        ["case", "expected_type", "expected_dim", "computed_dim", "center", "derived", "killing", "pass"]
    );
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 1);
    assert_eq!(&rows[0][1], "u(2)");
    assert_eq!(&rows[0][3], "4");
    assert_eq!(&rows[0][4], "1");
    assert_eq!(&rows[0][7], "true");
}

#[test]
fn centralize_pair_and_float_backend() {
    let (report, code) = json_report(&["centralize", "--r", "4", "--m", "1", "--m2", "2", "--backend", "float"]);
    assert_eq!(code, 0);
    assert_eq!(report.rows[0].computed_type, "sp(1)+sp(2)");
    assert_eq!(report.rows[0].computed_dim, Some(13));
}

#[test]
fn verify_suites() {
    let (report, code) = json_report(&["verify", "lemma"]);
    assert_eq!(code, 0);
    assert_eq!(report.rows.len(), 7);
    let (report, code) = json_report(&["verify", "thm2", "--r", "4"]);
    assert_eq!(code, 0);
    assert_eq!(report.rows.len(), 3);
    assert!(report.rows.iter().all(|r| r.expected_type.starts_with("sp(")));
}

#[test]
fn pretty_output_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("prop1.txt");
    let out = run(&["verify", "prop1", "--format", "pretty", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.lines().next().unwrap().starts_with("case"));
    assert!(text.contains("5 of 5 rows pass"));
}

#[test]
fn usage_and_guard_errors_exit_2() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["centralize", "--m", "1"]).status.code(), Some(2));
    assert_eq!(run(&["centralize", "--r", "4", "--m", "1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "thm1", "--backend", "float"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
    let guarded = run(&["centralize", "--r", "11", "--m", "2", "--max-n", "64"]);
    assert_eq!(guarded.status.code(), Some(2));
    assert!(!guarded.stderr.is_empty());
    let env_guard = Command::new(env!("CARGO_BIN_EXE_spincent"))
        .args(["centralize", "--r", "3", "--m", "3"])
        .env("SPINCENT_MAX_N", "8")
        .output()
        .unwrap();
    assert_eq!(env_guard.status.code(), Some(2));
}

#[test]
fn export_round_trips() {
    let out = run(&["export", "rep", "--r", "8", "--label", "minus"]);
    assert_eq!(out.status.code(), Some(0));
    let set = MatrixSet::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!((set.kind.as_str(), set.size, set.matrices.len()), ("rep", 8, 28));
    let mats = set.rational_matrices().unwrap();
    let expected = spincent_core::tensor::spinor_rep(8, Some(spincent_core::real_form::Label::Minus)).unwrap();
    assert_eq!(mats, expected.gens());

    let out = run(&["export", "centralizer", "--r", "5", "--m", "1"]);
    let set = MatrixSet::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!((set.size, set.matrices.len()), (8, 3));
    for x in set.rational_matrices().unwrap() {
        assert!(x.is_antisymmetric());
    }

    let out = run(&["export", "kappa", "--r", "5"]);
    let set = MatrixSet::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(set.gaussian_matrices().unwrap(), spincent_core::spinor::build_kappa(5).unwrap().gens());
}
