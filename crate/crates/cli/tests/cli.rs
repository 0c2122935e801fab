use std::process::{Command, Output};

use ucm_cli::commands::{self, PairKind, PAIR_CLONE_ANCILLA_COLUMNS, TRIPARTITE_COLUMNS};
use ucm_cli::table::{Kind, Table};

fn ucm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ucm"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = ucm(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn one_to_two_clone_row() {
    assert_eq!(
        stdout(&["pair", "--n", "1", "--m", "2", "--kind", "clones"]),
        "N,M,a,c,e,concurrence,concurrence_exact_zero,eof,fidelity\n\
         1,2,2/3,1/6,0,0.333333333333,false,0.187298598569,5/6\n"
    );
}

#[test]
fn identity_cloner_is_a_product_state() {
    let text = stdout(&["pair", "--n", "3", "--m", "3"]);
    assert_eq!(text.lines().nth(1), Some("3,3,1,0,0,0,true,0,1"));
}

#[test]
fn two_to_three_concurrence_is_one_sixth() {
    let text = stdout(&["pair", "--n", "2", "--m", "3"]);
    assert!(text
        .lines()
        .nth(1)
        .unwrap()
        .contains(",0.166666666667,false,"));
}

#[test]
fn clone_ancilla_row_keeps_the_radical() {
    let text = stdout(&["pair", "--n", "2", "--m", "4", "--kind", "clone-ancilla"]);
    assert_eq!(
        text.lines().next(),
        Some("N,M,a,b,c,d,e,concurrence,concurrence_exact_zero,eof,fidelity")
    );
    assert!(text.contains("1/20*sqrt(2)+1/20*sqrt(6)"));
}

#[test]
fn fig1_first_row_and_monotone() {
    let text = stdout(&["fig1", "--m-max", "50"]);
    let rows: Vec<(u32, f64)> = text
        .lines()
        .skip(1)
        .map(|l| {
            let (m, c) = l.split_once(',').unwrap();
            (m.parse().unwrap(), c.parse().unwrap())
        })
        .collect();
    assert_eq!(text.lines().nth(1), Some("2,0.666666666667"));
    assert_eq!(rows.len(), 49);
    assert!(rows.windows(2).all(|w| w[1].1 < w[0].1));
    assert!(rows.iter().all(|r| r.1 > 0.0));
}

#[test]
fn tripartite_rows() {
    let text = stdout(&["tripartite", "--n", "1", "--m", "3"]);
    assert_eq!(text.lines().nth(1), Some("1,3,1/2,1/3,1/6,0,true,second"));
    let text = stdout(&["tripartite", "--n", "1", "--m", "5"]);
    assert!(text.lines().nth(1).unwrap().ends_with(",false,none"));
    let text = stdout(&["tripartite", "--n", "4", "--m", "6"]);
    assert!(text.lines().nth(1).unwrap().contains(",true,"));
}

#[test]
fn state_lists_every_amplitude() {
    assert_eq!(
        stdout(&["state", "--n", "1", "--m", "3"]),
        "N,M,j,alpha_sq\n1,3,0,1/2\n1,3,1,1/3\n1,3,2,1/6\n"
    );
}

#[test]
fn json_objects_carry_exact_and_decimal() {
    let text = stdout(&["--format", "json", "pair", "--n", "1", "--m", "2"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v[0]["a"]["exact"], "2/3");
    assert_eq!(v[0]["a"]["decimal"], "0.666666666667");
    assert_eq!(v[0]["concurrence_exact_zero"], false);
    assert!(text.find("\"N\"").unwrap() < text.find("\"fidelity\"").unwrap());
}

#[test]
fn verify_small_caps_pass() {
    for cap in ["2", "5"] {
        let text = stdout(&["verify", "--m-cap", cap]);
        assert!(text.contains("one_to_two_literal"));
        assert!(text.lines().skip(1).all(|l| l.ends_with(",true")));
    }
}

#[test]
fn exit_codes() {
    assert_eq!(ucm(&["verify", "--m-cap", "8"]).status.code(), Some(1));
    assert_eq!(ucm(&["fig1", "--m-max", "1"]).status.code(), Some(1));
    assert_eq!(
        ucm(&["tripartite", "--n", "1", "--m", "2"]).status.code(),
        Some(1)
    );
    assert_eq!(
        ucm(&["pair", "--n", "1", "--m", "1"]).status.code(),
        Some(1)
    );
    assert_eq!(ucm(&["pair"]).status.code(), Some(1));
    assert_eq!(ucm(&["--help"]).status.code(), Some(0));
    assert_eq!(ucm(&["--version"]).status.code(), Some(0));
}

#[test]
fn domain_errors_name_the_constraint() {
    let out = ucm(&["pair", "--n", "3", "--m", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("1 <= N <= M"));
    let out = ucm(&["pair", "--n", "1", "--m", "1"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("M >= 2"));
}

#[test]
fn output_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig1.csv");
    let out = ucm(&["fig1", "--m-max", "20", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        stdout(&["fig1", "--m-max", "20"])
    );
}

fn assert_round_trip(columns: &[(&'static str, Kind)], table: &Table) {
    let text = table.to_csv();
    let parsed = Table::from_csv(columns, &text).unwrap();
    assert_eq!(parsed.to_csv(), text);
}

#[test]
fn csv_round_trips_byte_for_byte() {
    for kind in [PairKind::Clones, PairKind::CloneAncilla] {
        assert_round_trip(
            kind.columns(),
            &commands::pair(1, 2, Some(40), kind).unwrap(),
        );
        assert_round_trip(
            kind.columns(),
            &commands::pair(5, 5, Some(30), kind).unwrap(),
        );
    }
    assert_round_trip(
        PAIR_CLONE_ANCILLA_COLUMNS,
        &commands::pair(7, 9, Some(25), PairKind::CloneAncilla).unwrap(),
    );
    assert_round_trip(commands::FIG1_COLUMNS, &commands::fig1(1000).unwrap());
    assert_round_trip(
        TRIPARTITE_COLUMNS,
        &commands::tripartite(2, 3, Some(60)).unwrap(),
    );
    assert_round_trip(commands::STATE_COLUMNS, &commands::state(3, 40).unwrap());
    let report = commands::verify(3, 1).unwrap();
    assert_round_trip(commands::VERIFY_COLUMNS, &commands::verify_table(&report));
}

#[test]
fn emitted_file_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pair.csv");
    let out = ucm(&[
        "pair",
        "--n",
        "2",
        "--m",
        "4",
        "--m-max",
        "12",
        "--kind",
        "clone-ancilla",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let parsed = Table::from_csv(PAIR_CLONE_ANCILLA_COLUMNS, &text).unwrap();
    assert_eq!(parsed.to_csv(), text);
}
