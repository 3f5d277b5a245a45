use std::process::{Command, Output};

use rrcrystal::format::parse_matrix_json;
use rrcrystal_core::{difference_matrix, AffineType};

fn rrcrystal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rrcrystal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn matrix_csv_first_row() {
    let o = rrcrystal(&["matrix", "--type", "D4_3", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some(",phi,+21,+11,+10,r1,-10,-11,-21"));
    assert_eq!(lines.next(), Some("phi,0,1,2,3,4,5,6,7"));
    assert_eq!(out.lines().count(), 9);
}

#[test]
fn matrix_json_round_trips() {
    for tag in ["G2_1", "E6(2)", "e8_1"] {
        let o = rrcrystal(&["matrix", "--type", tag, "--format", "json"]);
        assert_eq!(code(&o), 0, "{tag}");
        let m = parse_matrix_json(&stdout(&o)).unwrap();
        let t = AffineType::from_tag(tag).unwrap();
        assert_eq!(m, difference_matrix(t).unwrap());
    }
}

#[test]
fn icon_lists_forbidden_parts() {
    let o = rrcrystal(&["icon", "--type", "D4_3"]);
    assert_eq!(stdout(&o), "1,-10\n2,-11\n3,-21\n");
}

#[test]
fn ccon_rows() {
    let o = rrcrystal(&["ccon", "--type", "D4_3"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(out.lines().next(), Some("0,phi r1"));
    assert_eq!(out.lines().count(), 4);
    let md = stdout(&rrcrystal(&["ccon", "--type", "G2_1", "--format", "md"]));
    assert!(md.contains("| 0 mod 6 | phi, r1, r2 |"));
}

#[test]
fn product_at_degree_zero() {
    let o = rrcrystal(&["product", "--type", "E8_1", "--max", "0"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "0,1\n");
}

#[test]
fn sum_series() {
    let o = rrcrystal(&["sum", "--type", "D4_3", "--max", "10"]);
    let values: Vec<u64> = stdout(&o)
        .lines()
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert_eq!(values, [1, 1, 1, 1, 2, 3, 3, 4, 6, 7, 8]);
}

#[test]
fn specialize_columns() {
    let o = rrcrystal(&["specialize", "--type", "D4_3", "--max", "6"]);
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("degree,f1_dual,f2_dual,character"));
    assert_eq!(lines.next(), Some("0,1,1,1"));
    assert_eq!(out.lines().count(), 8);
}

#[test]
fn check_single_type() {
    let o = rrcrystal(&["check", "--type", "D4_3", "--max", "60"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().last(), Some("60,13032,13032,13032"));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("PASS D4_3"));

    let o = rrcrystal(&["check", "--type", "G2_1", "--max", "1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "p,c,d,reference\n0,1,1,1\n1,1,1,1\n");
}

#[test]
fn check_beyond_reference() {
    let o = rrcrystal(&["check", "--type", "E6_2", "--max", "70", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["reference"].is_null());
    assert_eq!(v["verdict"]["status"], "pass");
    assert_eq!(v["d"][60], 2409);
}

#[test]
fn check_all_types() {
    let o = rrcrystal(&["check", "--all"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 8);
    assert!(out.contains("G2_1,60,17537,pass,"));
    assert!(out.contains("E8_1,60,328,pass,"));
}

#[test]
fn usage_errors_exit_64() {
    for args in [
        &[][..],
        &["matrix"][..],
        &["matrix", "--type", "A1_1"][..],
        &["sum", "--type", "G2_1", "--max", "-1"][..],
        &["check", "--type", "G2_1", "--max", "0"][..],
        &["check", "--type", "G2_1", "--all"][..],
        &["matrix", "--type", "G2_1", "--format", "xml"][..],
    ] {
        assert_eq!(code(&rrcrystal(args)), 64, "{args:?}");
    }
    assert_eq!(code(&rrcrystal(&["--help"])), 0);
    assert_eq!(code(&rrcrystal(&["--version"])), 0);
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.csv");
    let o = rrcrystal(&["matrix", "--type", "G2_1", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 16);

    let missing = dir.path().join("no/such/dir/m.csv");
    let o = rrcrystal(&[
        "matrix",
        "--type",
        "G2_1",
        "--out",
        missing.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 74);
}
