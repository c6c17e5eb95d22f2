use std::path::PathBuf;
use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coduality")).args(args).output().unwrap()
}

fn fixture(rel: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(rel).display().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn tmp(name: &str) -> String {
    std::env::temp_dir().join(format!("coduality-cli-{}-{name}", std::process::id())).display().to_string()
}

#[test]
fn matrix_coalgebra_checks() {
    let o = bin(&["check", &fixture("valid/matrix_coalgebra_2.json")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("PASS coassociativity"), "{out}");
    assert!(out.trim_end().ends_with("verdict: PASS"), "{out}");
}

#[test]
fn mutated_grouplike_names_counit_and_basis_index() {
    let o = bin(&["check", &fixture("fail/mutated_grouplike_2.json")]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("FAIL counit (left) (witness basis index 0)"), "{out}");
    assert!(out.contains("lhs:") && out.contains("rhs:"), "{out}");
}

#[test]
fn parse_errors_exit_two_with_class() {
    for (file, class) in [
        ("malformed_json", "malformed-json"),
        ("unknown_kind", "unknown-kind"),
        ("shape_mismatch", "shape-mismatch"),
        ("out_of_range_residue", "bad-element"),
        ("zero_denominator", "bad-element"),
        ("float_entry", "bad-element"),
        ("missing_key", "missing-key"),
        ("unsupported_version", "unsupported-version"),
    ] {
        let o = bin(&["check", &fixture(&format!("error/{file}.json"))]);
        assert_eq!(o.status.code(), Some(2), "{file}");
        let err = stderr(&o);
        assert!(err.contains(&format!("[{class}]")), "{file}: {err}");
        assert!(stdout(&o).is_empty(), "{file}");
    }
}

#[test]
fn dual_roundtrip_through_files() {
    let a = tmp("algebra.json");
    let c = tmp("coalgebra.json");
    let o = bin(&["dual", &fixture("valid/matrix_coalgebra_2.json"), "--out", &a]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(std::fs::read_to_string(&a).unwrap().contains("\"kind\": \"algebra\""));
    let o = bin(&["dual", &a, "--out", &c]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let original = coduality::format::parse_file(fixture("valid/matrix_coalgebra_2.json").as_ref()).unwrap();
    let back = coduality::format::parse_file(c.as_ref()).unwrap();
    assert_eq!(coduality::format::emit(&original), coduality::format::emit(&back));
}

#[test]
fn dual_without_out_prints_structure() {
    let o = bin(&["dual", &fixture("valid/regular_comodule_grouplike_2.json")]);
    assert_eq!(o.status.code(), Some(0));
    let s = coduality::format::parse_str(&stdout(&o), None).unwrap();
    assert_eq!(s.kind(), "contramodule");
    assert!(s.check().passed());
    assert!(stderr(&o).contains("verdict: PASS"));
}

#[test]
fn dual_of_bicomodule_is_an_input_error() {
    let o = bin(&["dual", &fixture("valid/regular_bicomodule_grouplike_2.json")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn cotensor_reports_both_dimensions() {
    let o = bin(&[
        "cotensor",
        &fixture("valid/regular_right_comodule_grouplike_2.json"),
        &fixture("valid/regular_comodule_grouplike_2.json"),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("L cotensor M = 2"), "{out}");
    assert!(out.contains("L* tensor M* over C* = 2"), "{out}");
}

#[test]
fn base_mismatch_is_rejected() {
    let o = bin(&[
        "cotensor",
        &fixture("valid/right_comodule_divided_power_2.json"),
        &fixture("valid/regular_comodule_grouplike_2.json"),
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn cohom_and_adjoint_run() {
    let o = bin(&[
        "cohom",
        &fixture("valid/bicomodule_grouplike_2_divided_power_1.json"),
        &fixture("valid/contramodule_divided_power_1.json"),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = bin(&[
        "adjoint",
        &fixture("valid/regular_right_comodule_grouplike_2.json"),
        &fixture("valid/bicomodule_grouplike_2_divided_power_1.json"),
        &fixture("valid/contramodule_divided_power_1.json"),
        "--seed",
        "4",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn json_report_is_valid_json() {
    let o = bin(&["--format", "json", "check", &fixture("valid/tower_divided_power_3.json")]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"], "PASS");
}

#[test]
fn random_is_reproducible() {
    let a = bin(&["random", "bicomodule", "--coalgebra", "matrix:2", "--seed", "9"]);
    let b = bin(&["random", "bicomodule", "--coalgebra", "matrix:2", "--seed", "9"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn selftest_is_byte_identical_across_runs() {
    let a = bin(&["selftest", "--seed", "1", "--count", "50"]);
    let b = bin(&["selftest", "--seed", "1", "--count", "50"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);
    let out = stdout(&a);
    assert!(out.contains("seed 1"), "{out}");
    assert!(out.contains("failed instances = 0"), "{out}");
}

#[test]
fn selftest_report_to_file_matches_stdout() {
    let path = tmp("selftest.txt");
    let a = bin(&["selftest", "--seed", "2", "--count", "8", "--out", &path]);
    assert_eq!(a.status.code(), Some(0));
    let b = bin(&["selftest", "--seed", "2", "--count", "8"]);
    assert_eq!(std::fs::read(&path).unwrap(), b.stdout);
}
