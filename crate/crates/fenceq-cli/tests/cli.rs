use std::io::Write;
use std::process::{Command, Output, Stdio};

use fenceq::fixtures::{nine_gon_instance, twelve_gon_single_lamination};
use serde_json::Value;

fn fenceq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fenceq"))
        .args(args)
        .output()
        .unwrap()
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fenceq"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn poly(v: &Value) -> Vec<i64> {
    serde_json::from_value(v["poly"].clone()).unwrap()
}

#[test]
fn rank_examples() {
    let out = fenceq(&["rank", "--alpha", "1,2,1,2", "--variant", "circular"]);
    assert!(out.status.success());
    let v = &lines(&out)[0];
    assert_eq!(poly(v), vec![1, 2, 3, 2, 3, 2, 1]);
    assert_eq!(v["report"]["unimodal"], false);
    let out = fenceq(&["rank", "--alpha", "1,1", "--variant", "plain"]);
    assert_eq!(poly(&lines(&out)[0]), vec![1, 2, 1, 1]);
    let out = fenceq(&[
        "rank",
        "--alpha",
        "[0,2,1]",
        "--variant",
        "ij",
        "--i",
        "1",
        "--j",
        "4",
    ]);
    assert!(out.status.success());
}

#[test]
fn notched_rank_matches_subset_count() {
    let out = fenceq(&["rank", "--alpha", "2,2,2,2", "--variant", "notched-last"]);
    let got = poly(&lines(&out)[0]);
    // x1<x2<x3>x4>x5<x6<x7>x8>x9 with x9 < x6 (s even: (n+1, n - a_s))
    let below: [&[usize]; 9] = [&[], &[0], &[1, 3], &[4], &[], &[4, 8], &[5, 7], &[8], &[]];
    let mut counts = vec![0i64; 10];
    for s in 0u32..1 << 9 {
        if (0..9).all(|b| s & 1 << b == 0 || below[b].iter().all(|&a| s & 1 << a != 0)) {
            counts[s.count_ones() as usize] += 1;
        }
    }
    assert_eq!(got, counts);
}

#[test]
fn exit_codes() {
    assert_eq!(fenceq(&["rank", "--alpha", "1,x"]).status.code(), Some(2));
    assert_eq!(
        fenceq(&["rank", "--alpha", "1", "--variant", "notched-last"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        fenceq(&["rank", "--alpha", "1,1,1", "--variant", "circular"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        fenceq(&["scan", "--mode", "single_lam", "--n", "3..5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        fenceq(&["scan", "--mode", "bogus", "--n", "5"])
            .status
            .code(),
        Some(2)
    );
    let bad = r#"{"triangulation":{"n":5,"diagonals":[[1,3],[2,4]]},"arc":[1,4]}"#;
    assert_eq!(fenceq(&["cpoly", "--json", bad]).status.code(), Some(2));
    assert_eq!(with_stdin(&["cpoly"], "not json").status.code(), Some(2));
}

#[test]
fn cpoly_examples() {
    let nine = serde_json::to_string(&nine_gon_instance()).unwrap();
    let out = with_stdin(&["cpoly", "--input", "-"], &nine);
    assert!(out.status.success());
    let v = &lines(&out)[0];
    assert_eq!(poly(v), vec![7, 6, 1]);
    assert_eq!(v["report"]["ineq_a"], false);
    let twelve = serde_json::to_string(&twelve_gon_single_lamination()).unwrap();
    let v = &lines(&fenceq(&[
        "cpoly",
        "--json",
        &twelve,
        "--planner",
        "random",
        "--planner-seed",
        "9",
    ]))[0];
    assert_eq!(poly(v), vec![2, 5, 9, 12, 11, 10, 6, 4, 2]);
    // 6^2 < 10 * 4
    assert_eq!(v["report"]["log_concave"], false);
    assert_eq!(v["report"]["unimodal"], true);
    let trivial = r#"{"triangulation":{"n":5,"diagonals":[[1,3],[1,4]]},"arc":[1,3]}"#;
    assert_eq!(
        poly(&lines(&fenceq(&["cpoly", "--json", trivial]))[0]),
        vec![1]
    );
}

#[test]
fn fpoly_and_arc_poset_agree() {
    let inst =
        r#"{"triangulation":{"n":8,"diagonals":[[1,7],[1,6],[1,5],[2,5],[2,4]]},"arc":[3,8]}"#;
    let f = &lines(&fenceq(&["fpoly", "--json", inst]))[0];
    assert_eq!(f["crossings"], 5);
    let out = fenceq(&["arc-poset", "--json", inst]);
    assert!(out.status.success());
    let a = &lines(&out)[0];
    assert_eq!(a["rank"], f["poly"]);
    assert_eq!(a["matches_f_polynomial"], true);
    assert_eq!(a["crossed"].as_array().unwrap().len(), 5);
}

#[test]
fn verify_identities_command() {
    let out = fenceq(&["verify-identities", "--alpha", "2,2,2,2"]);
    assert!(out.status.success());
    assert_eq!(lines(&out)[0]["all_hold"], true);
    let out = fenceq(&["verify-identities", "--n", "3..7"]);
    assert!(out.status.success());
    let l = lines(&out);
    assert_eq!(l.last().unwrap()["failed"], 0);
    assert_eq!(
        fenceq(&["verify-identities", "--alpha", "1,1"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn scan_output_is_deterministic() {
    let run = |workers: &str| {
        Command::new(env!("CARGO_BIN_EXE_fenceq"))
            .args(["scan", "--mode", "single_lam", "--n", "5..7", "--no-timing"])
            .env("FENCEQ_WORKERS", workers)
            .output()
            .unwrap()
    };
    let a = run("1");
    let b = run("4");
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let l = lines(&a);
    let summary = l.last().unwrap();
    assert_eq!(summary["type"], "summary");
    assert_eq!(summary["violations"], 0);
    assert!(summary.get("elapsed_secs").is_none());
}

#[test]
fn theorem_scan_failure_exits_nonzero() {
    let out = fenceq(&["scan", "--mode", "notched", "--n", "3"]);
    assert_eq!(out.status.code(), Some(4));
    let l = lines(&out);
    assert!(l.iter().any(|v| v["type"] == "violation"));
}

#[test]
fn conjecture_scan_exits_zero() {
    let out = fenceq(&[
        "scan",
        "--mode",
        "log_concavity",
        "--n",
        "10..11",
        "--sample-limit",
        "200",
    ]);
    assert!(out.status.success());
    assert_eq!(lines(&out).last().unwrap()["instances_checked"], 400);
}

#[test]
fn golden_fixture_command_passes() {
    let out = fenceq(&["reproduce-paper"]);
    assert!(out.status.success());
    let l = lines(&out);
    assert!(l
        .iter()
        .filter(|v| v["type"] == "fixture")
        .all(|v| v["pass"] == true));
    assert_eq!(l.last().unwrap()["passed"], l.last().unwrap()["total"]);
}

#[test]
fn pretty_output() {
    let out = fenceq(&["rank", "--alpha", "2,1", "--pretty"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("almost interlacing"));
}
