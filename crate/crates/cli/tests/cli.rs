use std::fs;
use std::process::Command as Process;

use sumprod_cli::{execute, exit_code, parse, Command};

fn run(args: &[&str]) -> (i32, String) {
    let cli = parse(args).expect("arguments parse");
    let mut out = Vec::new();
    let code = match execute(&cli, &mut out) {
        Ok(()) => 0,
        Err(f) => exit_code(&f),
    };
    (code, String::from_utf8(out).unwrap())
}

fn binary(args: &[&str]) -> (i32, String) {
    let output = Process::new(env!("CARGO_BIN_EXE_sumprod")).args(args).output().unwrap();
    (output.status.code().unwrap(), String::from_utf8(output.stdout).unwrap())
}

#[test]
fn parses_documented_commands() {
    let cli = parse(["eval", "--graph", "g.txt", "--labels", "l.txt"]).unwrap();
    assert!(matches!(cli.command, Command::Eval { .. }));
    assert!(matches!(parse(["table9"]).unwrap().command, Command::Table9 { .. }));
    assert!(parse(["frobnicate"]).is_err());
    assert!(parse(["table9", "--no-such-flag"]).is_err());
    assert!(parse(["euler", "--depth", "two"]).is_err());
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(binary(&["frobnicate"]).0, 1);
    assert_eq!(binary(&["--help"]).0, 0);
}

#[test]
fn table9_verifies() {
    let (code, out) = run(&["table9"]);
    assert_eq!(code, 0);
    assert!(out.contains("distinct labels: 18, sums: 3, products: 3, sp: 3"));
    assert!(out.contains("identical"));
    assert!(out.contains("-164308056580096"));
    assert_eq!(out.lines().count(), 12);
}

#[test]
fn table9_rejects_bad_fixture() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.csv");
    fs::write(&path, "x,y\n1,2\n2,3\n").unwrap();
    let (code, _) = run(&["table9", "--fixture", path.to_str().unwrap()]);
    assert_eq!(code, 1);
}

#[test]
fn euler_depth_two() {
    let (code, out) = run(&["euler", "--depth", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "0 1/2\n1 191/60\n2 1175343361/1154457480\n");
}

#[test]
fn expander_report_is_reproducible_and_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let (code, _) = run(&["expander", "--n", "1024", "--d", "56", "--seed", "7", "--out", p.to_str().unwrap()]);
        assert_eq!(code, 0);
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    let report: serde_json::Value = serde_json::from_slice(&fs::read(&a).unwrap()).unwrap();
    assert!(report["sum_set_size"].as_u64().unwrap() <= 112);
    let (code, out) = run(&["verify", "expander", a.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");

    let mut tampered = report.clone();
    tampered["sum_set_size"] = serde_json::json!(3);
    fs::write(&b, serde_json::to_string(&tampered).unwrap()).unwrap();
    assert_eq!(run(&["verify", "expander", b.to_str().unwrap()]).0, 1);
}

#[test]
fn curve_family_and_pairs_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let curve = dir.path().join("curve.json");
    let family = dir.path().join("family.json");
    let pairs = dir.path().join("pairs.csv");
    let (code, out) = run(&["curve", "--triple", "4/9,16/9,1/9", "--out", curve.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("\"alpha\": \"-63\""));
    assert_eq!(run(&["verify", "curve", curve.to_str().unwrap()]).0, 0);

    let (code, _) = run(&[
        "translates", "curve", "--triple", "4/9,16/9,1/9", "--generator", "1,10", "--count", "5",
        "--family-out", family.to_str().unwrap(), "--sums", "3", "--products", "5",
        "--pairs-csv", pairs.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let (code, out) = run(&["verify", "family", family.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, "ok: 5 translates of a 3-element base\n"));
    let (code, out) = run(&["verify", "pairs", pairs.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, "ok: 15 pairs, 30 distinct labels, 3 sums, 5 products\n"));

    let text = fs::read_to_string(&pairs).unwrap().replacen(",", ",1", 2);
    fs::write(&pairs, text).unwrap();
    assert_eq!(run(&["verify", "pairs", pairs.to_str().unwrap()]).0, 1);
}

#[test]
fn torsion_generator_is_a_domain_error() {
    let (code, _) = run(&["translates", "curve", "--triple", "4/9,16/9,1/9", "--generator", "3,0"]);
    assert_eq!(code, 1);
}

#[test]
fn eval_reads_files_written_by_construct() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.txt");
    let l = dir.path().join("l.txt");
    let (code, _) = run(&[
        "construct", "triangles", "--m", "5", "--graph-out", g.to_str().unwrap(), "--labels-out", l.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let (code, out) = run(&["eval", "--graph", g.to_str().unwrap(), "--labels", l.to_str().unwrap()]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["edges"], 30);
    assert_eq!(v["profile"]["sum_count"], 5);
    let (code, out) = run(&["bounds", "odd-cycle", "--graph", g.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("\"odd_cycle_bound\": 4"));
}

#[test]
fn missing_file_is_reported() {
    let (code, _) = run(&["eval", "--graph", "/nonexistent/g", "--labels", "/nonexistent/l"]);
    assert_eq!(code, 1);
}

#[test]
fn reduction_exit_codes() {
    let (code, out) = run(&["construct", "reduce", "--complete", "64", "--seed", "3"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["report"]["guarantees_checked"].as_array().unwrap().iter().all(|g| g["holds"] == true));
    // a single attempt under seed 15 is rejected
    assert_eq!(binary(&["construct", "reduce", "--complete", "64", "--seed", "15", "--retries", "1"]).0, 2);
    // K18 misses the degree hypothesis
    assert_eq!(run(&["construct", "reduce", "--complete", "18", "--seed", "0"]).0, 1);
}

#[test]
fn bounds_and_small_commands() {
    let cases: &[(&[&str], &str)] = &[
        (&["bounds", "kst", "--m", "10", "--k", "2", "--r", "2"], "\"38\""),
        (&["bounds", "fk", "--n", "9", "--k", "2", "--r", "1"], "\"3\""),
        (&["bounds", "diameter", "--n", "1099511627776", "--r", "40"], "9"),
        (&["bounds", "genus", "--k", "5"], "\"17\""),
        (&["bounds", "height", "--t", "217/16"], "5.379"),
        (&["oracle", "--n", "2", "--bound", "5"], "\"sp\": 2"),
        (&["translates", "pair", "--a", "0", "--b", "7"], "\"9\""),
        (&["translates", "scan", "--base", "0,7", "--bound", "100"], "\"9\""),
        (&["construct", "interval", "--n", "1024", "--eps", "0.1"], "\"construction\": \"interval\""),
        (&["construct", "real-matching", "--n", "9", "--seed", "1"], "\"sum_count\": 3"),
    ];
    for (args, needle) in cases {
        let (code, out) = run(args);
        assert_eq!(code, 0, "{args:?}");
        assert!(out.contains(needle), "{args:?}: {out}");
    }
    assert_eq!(run(&["bounds", "genus", "--k", "2"]).0, 1);
    assert_eq!(run(&["euler", "--depth", "50"]).0, 1);
}
