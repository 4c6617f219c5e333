use std::path::PathBuf;
use std::process::Command;

use circlepath_cli::bfile::BFile;
use circlepath_cli::oeis::{self, Sequence};
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

/// Runs the binary and returns the exit code and the parsed report.
fn run(args: &[&str]) -> (i32, Value) {
    run_env(args, &[])
}

fn run_env(args: &[&str], env: &[(&str, &std::path::Path)]) -> (i32, Value) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_circlepath"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    let line = stdout.lines().next().unwrap_or("null");
    let report: Value = serde_json::from_str(line).unwrap_or(Value::Null);
    (out.status.code().unwrap(), report)
}

fn count(report: &Value, key: &str) -> String {
    report["counts"][key]
        .as_str()
        .unwrap_or_default()
        .to_string()
}

#[test]
fn count_examples() {
    let (code, r) = run(&["count", "--n", "44", "--admissible"]);
    assert_eq!(code, 0);
    assert_eq!(count(&r, "admissible"), "41107708028136365");
    assert_eq!(count(&run(&["count", "--n", "3", "--all"]).1, "all"), "1");
    assert_eq!(
        count(
            &run(&["count", "--n", "10", "--admissible"]).1,
            "admissible"
        ),
        "670"
    );
    let (_, r) = run(&["count", "--n", "50"]);
    assert_eq!(count(&r, "all"), "11844267374132633700");
    assert_eq!(count(&r, "admissible"), "11844250906909678730");
}

#[test]
fn count_rejects_small_n() {
    let (code, r) = run(&["count", "--n", "2"]);
    assert_eq!(code, 3);
    assert_eq!(r["status"], "error");
    let (code, _) = run(&["count", "--n", "x"]);
    assert_eq!(code, 3);
}

#[test]
fn realize_examples() {
    let (code, r) = run(&["realize", "--n", "9", "--multiset", "2,3,1,2"]);
    assert_eq!(code, 0);
    assert_eq!(r["details"]["verified"], true);
    let path: Vec<usize> = r["details"]["path"]
        .as_str()
        .unwrap()
        .split(',')
        .map(|s| s.parse().unwrap())
        .collect();
    let m = circlepath::Multiset::parse(9, "2,3,1,2").unwrap();
    assert!(circlepath::verify(&path, &m));

    let (code, r) = run(&["realize", "--n", "5", "--multiset", "4,0"]);
    assert_eq!(code, 0);
    assert_eq!(r["details"]["path"], "0,1,2,3,4");
}

#[test]
fn realize_inadmissible_names_the_divisor() {
    let (code, r) = run(&["realize", "--n", "4", "--multiset", "0,3"]);
    assert_eq!(code, 3);
    assert_eq!(r["details"]["violated_divisor"], 2);
    assert!(r["messages"][0].as_str().unwrap().contains("d = 2"));
    // wrong total
    let (code, _) = run(&["realize", "--n", "9", "--multiset", "2,3,1,1"]);
    assert_eq!(code, 3);
}

#[test]
fn realize_every_method() {
    for method in ["hillclimb", "lds", "mixed"] {
        let (code, r) = run(&[
            "realize",
            "--n",
            "12",
            "--multiset",
            "1,1,2,1,1,5",
            "--method",
            method,
        ]);
        assert_eq!(code, 0, "{method}");
        assert_eq!(r["details"]["verified"], true);
    }
}

#[test]
fn realize_failure_exits_2() {
    // a path needs n - 1 expansions, so this budget always runs out
    let (code, r) = run(&[
        "realize",
        "--n",
        "14",
        "--multiset",
        "1,0,2,2,1,0,7",
        "--method",
        "lds",
        "--node-budget",
        "3",
    ]);
    assert_eq!(code, 2);
    assert_eq!(r["status"], "fail");
}

#[test]
fn realize_is_deterministic_given_seed() {
    let args = [
        "realize",
        "--n",
        "16",
        "--multiset",
        "3,2,1,1,2,3,2,1",
        "--method",
        "hillclimb",
        "--seed",
        "7",
    ];
    let (_, a) = run(&args);
    let (_, b) = run(&args);
    assert_eq!(a["details"]["path"], b["details"]["path"]);
    assert_eq!(a["seed"], 7);
}

#[test]
fn campaign_pass_and_idempotent_rerun() {
    let dir = tempfile::tempdir().unwrap();
    let env = [("BHR_CHECKPOINT_DIR", dir.path())];
    let (code, r) = run_env(&["campaign", "--n", "12"], &env);
    assert_eq!(code, 0);
    assert_eq!(r["status"], "pass");
    assert_eq!(count(&r, "realized"), "4129");
    assert!(dir.path().join("campaign-n12.bhrc").exists());

    let (code, r) = run_env(&["campaign", "--n", "12"], &env);
    assert_eq!(code, 0);
    assert_eq!(r["status"], "pass");
    assert_eq!(count(&r, "solver_calls"), "0");
}

#[test]
fn campaign_resumes_across_ranges() {
    let dir = tempfile::tempdir().unwrap();
    let cp = dir.path().join("c.bhrc");
    let cp = cp.to_str().unwrap();
    let (code, r) = run(&["campaign", "--n", "11", "--checkpoint", cp, "--to", "500"]);
    assert_eq!(code, 0);
    assert_eq!(r["status"], "partial");
    let (code, r) = run(&["campaign", "--n", "11", "--checkpoint", cp, "--from", "500"]);
    assert_eq!(code, 0);
    assert_eq!(r["status"], "pass");
    assert_eq!(count(&r, "realized"), "1001");
}

#[test]
fn campaign_refuses_corrupt_checkpoint() {
    let dir = tempfile::tempdir().unwrap();
    let cp = dir.path().join("c.bhrc");
    std::fs::write(&cp, b"not a checkpoint").unwrap();
    let (code, r) = run(&[
        "campaign",
        "--n",
        "10",
        "--checkpoint",
        cp.to_str().unwrap(),
    ]);
    assert_eq!(code, 4);
    assert_eq!(r["status"], "error");

    // a valid checkpoint for another n
    let cp = dir.path().join("other.bhrc");
    let cps = cp.to_str().unwrap();
    assert_eq!(run(&["campaign", "--n", "9", "--checkpoint", cps]).0, 0);
    assert_eq!(run(&["campaign", "--n", "10", "--checkpoint", cps]).0, 4);
}

#[test]
fn identities_examples() {
    let (code, r) = run(&["identities", "--n", "15", "--basis"]);
    assert_eq!(code, 0);
    assert_eq!(
        r["details"]["basis"],
        serde_json::json!(["[1, 0, -1, -1, -1, 0, 2]", "[0, 1, 0, -2, -1, 1, 1]"])
    );
    assert_eq!(
        count(
            &run(&["identities", "--n", "33", "--dimension"]).1,
            "dimension"
        ),
        "5"
    );
    let (_, r) = run(&["identities", "--n", "15", "--essential"]);
    assert_eq!(count(&r, "full"), "38");
    assert_eq!(r["details"]["identities"].as_array().unwrap().len(), 4);
    let (code, r) = run(&["identities", "--n", "9", "--improper"]);
    assert_eq!(code, 0);
    assert!(r["details"]["improper"].as_str().unwrap().starts_with('['));
    assert_eq!(run(&["identities", "--n", "8", "--improper"]).0, 3);
    // a mode is required
    assert_eq!(run(&["identities", "--n", "8"]).0, 3);
}

#[test]
fn lengths_examples() {
    assert_eq!(
        count(&run(&["lengths", "--n", "18"]).1, "distinct_lengths"),
        "445507"
    );
    assert_eq!(
        count(&run(&["lengths", "--n", "8"]).1, "distinct_lengths"),
        "105"
    );
    let (code, r) = run(&["lengths", "--n", "12", "--method", "numeric"]);
    assert_eq!(code, 0);
    assert_eq!(count(&r, "distinct_lengths"), "2869");
    assert_eq!(run(&["lengths", "--n", "30", "--method", "numeric"]).0, 3);
}

#[test]
fn lengths_beyond_verified_range_needs_flag() {
    let (code, r) = run(&["lengths", "--n", "38"]);
    assert_eq!(code, 3);
    assert!(r["messages"][0]
        .as_str()
        .unwrap()
        .contains("--assume-conjecture"));
    // n = 38 has no identities, so the count is immediate
    let (code, r) = run(&["lengths", "--n", "38", "--assume-conjecture"]);
    assert_eq!(code, 0);
    assert_eq!(count(&r, "distinct_lengths"), "144074954225730");
}

#[test]
fn oeis_fixtures_pass() {
    let f = fixture("a352568.txt");
    let (code, r) = run(&[
        "oeis",
        "--sequence",
        "A352568",
        "--n-max",
        "37",
        "--bfile",
        f.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(r["status"], "pass");
    assert_eq!(count(&r, "compared"), "35");

    let f = fixture("a030077_offset.txt");
    let (code, r) = run(&[
        "oeis",
        "--sequence",
        "a030077",
        "--n-max",
        "15",
        "--bfile",
        f.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(r["details"]["shift"], 1);
    assert_eq!(count(&r, "compared"), "13");
}

#[test]
fn oeis_detects_a_wrong_value() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("b.txt");
    std::fs::write(&f, "3 1\n4 3\n5 5\n6 17\n7 28\n8 106\n").unwrap();
    let (code, r) = run(&[
        "oeis",
        "--sequence",
        "A030077",
        "--n-max",
        "8",
        "--bfile",
        f.to_str().unwrap(),
    ]);
    assert_eq!(code, 4);
    assert_eq!(count(&r, "failed"), "1");
    let lines = r["details"]["per_index"].as_array().unwrap();
    assert!(lines.iter().any(|l| l
        .as_str()
        .unwrap()
        .contains("FAIL expected 106 computed 105")));
}

#[test]
fn oeis_empty_and_malformed() {
    let f = fixture("empty.txt");
    let (code, r) = run(&[
        "oeis",
        "--sequence",
        "A030077",
        "--n-max",
        "5",
        "--bfile",
        f.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(r["status"], "pass");
    assert!(r["messages"][0].as_str().unwrap().contains("empty"));

    let f = fixture("malformed.txt");
    let (code, r) = run(&[
        "oeis",
        "--sequence",
        "A030077",
        "--n-max",
        "5",
        "--bfile",
        f.to_str().unwrap(),
    ]);
    assert_eq!(code, 3);
    assert!(r["messages"][0].as_str().unwrap().contains("line 4"));
}

#[test]
fn oeis_refuses_unverified_range() {
    let f = fixture("a352568.txt");
    assert_eq!(
        run(&[
            "oeis",
            "--sequence",
            "A352568",
            "--n-max",
            "40",
            "--bfile",
            f.to_str().unwrap()
        ])
        .0,
        3
    );
}

#[test]
fn pretty_output() {
    let out = Command::new(env!("CARGO_BIN_EXE_circlepath"))
        .args(["count", "--n", "12", "--pretty"])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("admissible: 4129"));
    assert!(text.contains("seed: 0"));
}

#[test]
fn bfile_parsing() {
    let b = BFile::parse("# c\n\n1 1\n2 007 # trailing\n3 -4\n").unwrap();
    assert_eq!(
        b.entries,
        vec![(1, "1".into()), (2, "7".into()), (3, "-4".into())]
    );
    assert_eq!(b.get(2), Some("7"));
    assert_eq!(b.get(4), None);
    for (text, line) in [
        ("1 1\n2\n", 2),
        ("1 1\n1 2\n", 2),
        ("x 1\n", 1),
        ("1 1 1\n", 1),
        ("1 -\n", 1),
    ] {
        match BFile::parse(text) {
            Err(circlepath::Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
            other => panic!("{text:?}: {other:?}"),
        }
    }
}

#[test]
fn alignment_needs_two_anchors() {
    let computed = [(3usize, "1".to_string()), (4, "3".into()), (5, "5".into())].into();
    let one = BFile::parse("4 3\n").unwrap();
    assert!(oeis::diff(&one, &computed).is_err());
    let two = BFile::parse("4 3\n5 5\n").unwrap();
    let d = oeis::diff(&two, &computed).unwrap();
    assert_eq!((d.shift, d.anchors), (0, 2));
    let shifted = BFile::parse("0 1\n1 3\n2 5\n").unwrap();
    assert_eq!(oeis::diff(&shifted, &computed).unwrap().shift, 3);
    let unrelated = BFile::parse("1 100\n2 200\n3 300\n").unwrap();
    assert!(oeis::diff(&unrelated, &computed).is_err());
    assert_eq!("a352568".parse::<Sequence>().unwrap(), Sequence::A352568);
}
