//! End-to-end tests against the built binary.

use std::collections::BTreeMap;
use std::process::{Command, Output};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lapsep_core::{classify, FactorShape, LabeledGraph, Verdict};

fn run(args: &[&str]) -> Output {
    run_with_env(args, &[])
}

fn run_with_env(args: &[&str], envs: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_lapsep"));
    cmd.args(args).env_remove("LAPSEP_MAX_WORKERS");
    for (k, v) in envs {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn results_of(json: &str) -> BTreeMap<String, String> {
    let v: serde_json::Value = serde_json::from_str(json.trim()).expect("valid json");
    v["results"]
        .as_object()
        .unwrap()
        .iter()
        .map(|(k, val)| (k.clone(), val.as_str().unwrap().to_string()))
        .collect()
}

#[test]
fn classify_exit_codes_and_fields() {
    let out = run(&["classify", "--p", "2", "--q", "2", "--edges", "2 3"]);
    assert_eq!(out.status.code(), Some(1));
    let res = results_of(&stdout(&out));
    assert_eq!(res["verdict"], "Entangled");
    assert_eq!(res["certificate"], "PtRowSumNonzero");
    assert_eq!(res["pt_row_sums"], "-1,1,1,-1");
    assert_eq!(res["block_lss"], "10;01");

    let out = run(&["classify", "--p", "2", "--q", "2", "--edges", "1 2"]);
    assert_eq!(out.status.code(), Some(0));
    let res = results_of(&stdout(&out));
    assert_eq!(res["verdict"], "Separable");
    assert_eq!(res["certificate"], "ExactTwoByQ");

    // empty graph is an input error
    let out = run(&["classify", "--p", "2", "--q", "2", "--edges", ""]);
    assert!(out.status.code().unwrap() >= 64);
}

#[test]
fn classify_accepts_mask_and_graph_file() {
    // mask 0x8 = edge (1,2) 0-based = {2,3} 1-based on 4 vertices
    let out = run(&["classify", "--p", "2", "--q", "2", "--mask", "0x8"]);
    assert_eq!(out.status.code(), Some(1));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    std::fs::write(&path, "n 4\n1 2\n").unwrap();
    let out = run(&["classify", "--p", "2", "--q", "2", "--graph-file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    // wrong vertex count for the shape
    std::fs::write(&path, "n 6\n1 2\n").unwrap();
    let out = run(&["classify", "--p", "2", "--q", "2", "--graph-file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(65));
}

#[test]
fn classify_usage_errors() {
    // no graph source
    let out = run(&["classify", "--p", "2", "--q", "2"]);
    assert_eq!(out.status.code(), Some(64));
    // two graph sources
    let out = run(&["classify", "--p", "2", "--q", "2", "--edges", "1 2", "--mask", "0x1"]);
    assert_eq!(out.status.code(), Some(64));
    // malformed edges
    for bad in ["1", "1 2 3", "0 2", "1 5", "2 2", "1 2,2 1"] {
        let out = run(&["classify", "--p", "2", "--q", "2", "--edges", bad]);
        assert_eq!(out.status.code(), Some(65), "edges {bad:?}");
    }
    // unknown subcommand / flags are clap usage errors
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn census_json_and_csv() {
    let out = run(&["census", "--p", "2", "--q", "2", "--workers", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let res = results_of(&stdout(&out));
    assert_eq!(res["total"], "63");
    assert_eq!(res["separable_exact"], "31");
    assert_eq!(res["entangled_exact"], "32");
    assert_eq!(res["ppt_count"], "31");
    assert_eq!(res["ls_lower"], "31");

    let out = run(&["census", "--p", "2", "--q", "2", "--format", "csv"]);
    let text = stdout(&out);
    let mut lines = text.split("\r\n");
    let header = lines.next().unwrap();
    assert!(header.starts_with("p,q,workers,total,thm3_count"));
    let row = lines.next().unwrap();
    let fields: Vec<&str> = row.split(',').collect();
    assert_eq!(fields[0], "2");
    assert_eq!(fields[3], "63");
    assert_eq!(fields[8], "31"); // separable_exact

    // skipping the PSD column leaves its field empty
    let out = run(&["census", "--p", "2", "--q", "2", "--skip-ppt", "--format", "csv"]);
    let text = stdout(&out);
    let row = text.split("\r\n").nth(1).unwrap();
    assert_eq!(row.split(',').nth(6).unwrap(), "");
}

#[test]
fn census_rejects_infeasible_shapes() {
    let out = run(&["census", "--p", "3", "--q", "3"]);
    assert_eq!(out.status.code(), Some(65));
    let out = run(&["census", "--p", "2", "--q", "5"]);
    assert_eq!(out.status.code(), Some(65));
    let out = run_with_env(&["census", "--p", "2", "--q", "2"], &[("LAPSEP_MAX_WORKERS", "zero")]);
    assert_eq!(out.status.code(), Some(64));
    let out = run_with_env(
        &["census", "--p", "2", "--q", "2", "--workers", "64"],
        &[("LAPSEP_MAX_WORKERS", "2")],
    );
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["inputs"]["workers"], "2");
}

#[test]
fn count_subcommands() {
    let out = run(&["count", "ns", "--n", "2"]);
    let res = results_of(&stdout(&out));
    assert_eq!(res["n_s"], "8");
    assert_eq!(res["n_e"], "8");

    let out = run(&["count", "ns", "--n", "6"]);
    assert_eq!(out.status.code(), Some(65));

    let out = run(&["count", "mni", "--n", "6", "--i", "6"]);
    let res = results_of(&stdout(&out));
    assert_eq!(res["count"], "4410");
    assert!(!res.contains_key("closed_form"));

    let out = run(&["count", "mni", "--n", "5", "--i", "2"]);
    let res = results_of(&stdout(&out));
    assert_eq!(res["count"], "45");
    assert_eq!(res["closed_form"], "45");

    let out = run(&["count", "ls2q", "--q", "2"]);
    let res = results_of(&stdout(&out));
    assert_eq!(res["l_s"], "31");
    assert_eq!(res["l_e"], "32");
}

#[test]
fn bounds_command() {
    let out = run(&["bounds", "--p", "3", "--q", "2"]);
    let res = results_of(&stdout(&out));
    assert_eq!(res["ls_lower"], "4095");
    assert_eq!(res["le_lower"], "24576");
    assert_eq!(res["ls_upper"], "8191");
    assert_eq!(res["le_upper"], "28672");
    assert_eq!(res["m_p"], "3,3");
    assert_eq!(res["l_total"], "32767");
}

#[test]
fn verify_table1_command() {
    let out = run(&["verify-table1", "--max-n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let passes = text.lines().filter(|l| l.starts_with("PASS ")).count();
    assert_eq!(passes, 7); // rows n=2,3,4
    assert!(text.lines().last().unwrap().starts_with("{\"command\":\"verify-table1\""));

    let out = run(&["verify-table1", "--max-n", "9"]);
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn json_output_round_trips_byte_identically() {
    for args in [
        vec!["census", "--p", "2", "--q", "2"],
        vec!["classify", "--p", "2", "--q", "3", "--edges", "1 4,2 5"],
        vec!["bounds", "--p", "2", "--q", "3"],
        vec!["count", "ns", "--n", "3"],
    ] {
        let out = run(&args);
        let text = stdout(&out);
        let line = text.trim();
        let parsed: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(serde_json::to_string(&parsed).unwrap(), line, "args {args:?}");
    }
}

#[test]
fn classify_exit_codes_match_library_verdicts() {
    let mut rng = ChaCha8Rng::seed_from_u64(2026);
    let shapes = [(2usize, 2usize), (2, 3), (3, 2)];
    for trial in 0..100 {
        let (p, q) = shapes[rng.random_range(0..shapes.len())];
        let n = p * q;
        let slots = n * (n - 1) / 2;
        let mask = rng.random_range(1u128..1 << slots);
        let g = LabeledGraph::from_mask(n, mask).unwrap();
        let shape = FactorShape::new(p, q).unwrap();
        let expected = match classify(&g, shape).unwrap() {
            Verdict::Separable(_) => 0,
            Verdict::Entangled(_) => 1,
            Verdict::Undetermined => 2,
        };
        let hex = format!("{mask:#x}");
        let out = run(&[
            "classify",
            "--p",
            &p.to_string(),
            "--q",
            &q.to_string(),
            "--mask",
            &hex,
        ]);
        assert_eq!(
            out.status.code(),
            Some(expected),
            "trial {trial}: shape ({p},{q}) mask {hex}"
        );
    }
}
