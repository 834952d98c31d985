use std::io::Write;
use std::process::{Command, Output};

use cqf_core::QSymExpansion;

fn cqf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cqf"))
        .args(args)
        .env_remove("CQF_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn expansion_and_verdicts_for_3412() {
    let out = cqf(&["cqf", "path:", "3", "4", "1", "2"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "(5q^3+7q^2+7q+5)M(1,1,1,1) + (2q^3+q^2+q+2)M(1,1,2) + (q^3+2q^2+2q+1)M(1,2,1) \
         + (2q^3+q^2+q+2)M(2,1,1) + (q^3+1)M(2,2)\n\
         palindromic: yes, symmetric: no (witness (1,1,2)/(1,2,1))\n"
    );
}

#[test]
fn json_output_round_trips() {
    for args in [
        &["cqf", "--json", "path: 2 4 3 1"][..],
        &["cqf", "--json", "star: n=5 center=3"],
        &["cqf", "--json", "n=4; 1 2; 2 3; 3 4; 1 4"],
    ] {
        let out = cqf(args);
        assert!(out.status.success(), "{}", stderr(&out));
        let text = stdout(&out);
        let json = text.trim_end();
        assert_eq!(QSymExpansion::from_json(json).unwrap().to_json(), json);
    }
}

#[test]
fn worker_count_does_not_change_the_output() {
    let args = ["cqf", "--json", "n=7; 1 4; 4 7; 4 5; 2 5; 3 4; 3 6"];
    let one = cqf(&[&args[..], &["--workers", "1"]].concat());
    let four = cqf(&[&args[..], &["--workers", "4"]].concat());
    assert!(one.status.success() && four.status.success());
    assert_eq!(one.stdout, four.stdout);

    let env = Command::new(env!("CARGO_BIN_EXE_cqf"))
        .args(["classify", "--json", "n=5"])
        .env("CQF_WORKERS", "3")
        .output()
        .unwrap();
    assert_eq!(env.stdout, cqf(&["classify", "--json", "n=5", "--workers", "1"]).stdout);
}

#[test]
fn graph_files() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "# path 2-4-3-1\nn=4\n2 4\n4 3\n3 1").unwrap();
    let out = cqf(&["cqf", "--file", file.path().to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("(2q^2+3q+1)M(1,1,2)"));

    let out = cqf(&["cqf", "--file", "/nonexistent/graph.txt"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn classify_four() {
    let out = cqf(&["classify", "n=4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.ends_with("2 of 8 patterns symmetric\n"), "{text}");

    let out = cqf(&["classify", "--json", "4"]);
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["symmetric_count"], 2);
    assert_eq!(report["patterns"].as_array().unwrap().len(), 8);
}

#[test]
fn ribbon_of_adad() {
    let out = cqf(&["ribbon", "pattern=adad", "--contains", "1,1,3", "--ends", "1,2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("composition: (2,2,1)"));
    assert!(text.contains("LU=3, RL=2"));
    assert!(text.contains("regular: yes"));
    assert!(text.contains("contains (1,1,3): no"));

    let out = cqf(&["ribbon", "--json", "path: 2 4 3 1"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["composition"], serde_json::json!([2, 1, 1]));
}

#[test]
fn bounds_need_an_override() {
    let out = cqf(&["classify", "n=10"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert_eq!(err.lines().count(), 1, "{err}");
    assert!(err.contains("--allow-large"));

    let labels: Vec<String> = (1..=13).map(|i| i.to_string()).collect();
    let path = format!("path: {}", labels.join(" "));
    assert_eq!(cqf(&["cqf", &path]).status.code(), Some(2));
}

#[test]
fn malformed_input_gives_one_line() {
    for args in [
        &["cqf", "path: 1 1 2"][..],
        &["cqf", "n=3; 1 5"],
        &["cqf", "tree: 1 2"],
        &["ribbon", "pattern=abc"],
        &["verify-star", "two"],
    ] {
        let out = cqf(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert_eq!(stderr(&out).lines().count(), 1, "{args:?}: {}", stderr(&out));
    }
    assert_ne!(cqf(&["frobnicate"]).status.code(), Some(0));
}

#[test]
fn star_and_bipartite_checks() {
    let out = cqf(&["verify-star", "3..6"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(stdout(&out).lines().filter(|l| l.ends_with(" ok")).count(), 4);

    let out = cqf(&["verify-bipartite", "--count", "10", "--sizes", "4,6"]);
    assert!(out.status.success());
    assert!(stdout(&out).ends_with("10 checked, 0 skipped, 0 failed\n"));

    let out = cqf(&["verify-bipartite", "star: n=4 center=1"]);
    assert!(stdout(&out).starts_with("ok "), "{}", stdout(&out));
    let out = cqf(&["verify-bipartite", "path: 1 2 3 4"]);
    assert!(stdout(&out).contains("equal bipartition"));
}

#[test]
fn zeta_and_psi_examples() {
    let out = cqf(&["witness", "zeta", "3,3,4", "--i", "1", "--b", "4", "--apply", "1,2,4 | 1,5,6 | 1,3,7,8"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("in B' but not B: 1,2,4 | 4,7,8 | 3,4,5,6"));
    assert!(text.contains("zeta(1,2,4 | 1,5,6 | 1,3,7,8) = 1,2,4 | 4,5,6 | 3,4,7,8"));
    assert!(text.contains("image in B: no"));

    let out = cqf(&["witness", "zeta", "2,2"]);
    assert!(stdout(&out).contains("in B' but not B: 1,2 | 2,3"));

    let out = cqf(&[
        "witness", "psi", "1,2,2,1,2,1", "--subribbon", "7", "--apply", "6 | 2,4 | 2,5 | 2 | 1,3 | 2",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("= 6 | 1,4 | 1,5 | 2 | 1,3 | 1"));
    assert!(text.contains("RL cell: 6 | 1,4 | 1,5 | 3 | 1,2 | 1"));

    let out = cqf(&["witness", "psi", "1,1,3"]);
    assert_eq!(out.status.code(), Some(2));
}
