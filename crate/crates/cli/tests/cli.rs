use std::process::{Command, Output};

fn ladder(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ladder")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

const S: &str = "[1..4, 2..5]";
const SP: &str = "[-1..2, 0..3]";

#[test]
fn socle_of_pinned_pair() {
    let o = ladder(&["socle", "--rank", "6", "--s", S, "--sp", SP]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for g in ["w[-1..4]^1", "w[1..2]^1", "w[0..5]^1", "w[2..3]^1"] {
        assert!(out.contains(g), "{out}");
    }
}

#[test]
fn rank_four_census_lists_five_tuples() {
    let o = ladder(&["census", "c1", "--rank", "4", "--s1", "0..3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).trim_end().ends_with("total: 5"));
    let o = ladder(&["--format", "csv", "census", "c1", "--rank", "4", "--s1", "0..3"]);
    assert_eq!(stdout(&o).lines().count(), 6);
}

#[test]
fn path_count() {
    let o = ladder(&["paths", "--rank", "4", "--segment", "0..2", "--count"]);
    assert_eq!(stdout(&o).trim(), "10");
    let o = ladder(&["--format", "json", "paths", "--rank", "3", "--segment", "0..2", "--extremal"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["values"], serde_json::json!([4, 3, 2, 3, 4]));
    assert_eq!(v[1]["values"], serde_json::json!([4, 5, 6, 5, 4]));
}

#[test]
fn json_output_is_deterministic() {
    let args = ["--format", "json", "census", "c1", "--rank", "5", "--seed-canonical"];
    let (a, b) = (ladder(&args), ladder(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert!(v.as_array().unwrap().iter().all(|r| r["count_enumerated"] == r["count_formula"]));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(ladder(&["socle", "--rank", "6", "--s", "[1..4", "--sp", SP]).status.code(), Some(2));
    assert_eq!(ladder(&["socle", "--rank", "6", "--s", SP, "--sp", S]).status.code(), Some(2));
    assert_eq!(ladder(&["census", "d2", "--rank", "4", "--s1", "0..1"]).status.code(), Some(2));
    assert_eq!(
        ladder(&["--format", "csv", "flags", "--rank", "6", "--s", S, "--sp", SP])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(ladder(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn weyl_membership_outcomes() {
    let target = "w[-1..2] * w[1..3] * w[0..4] * w[2..5] * w[2..6]^-1 * w[3..8]^-1 * w[4..7]^-1 * w[5..9]^-1";
    let factors = "[-1..2, 2..3, 1..3, 0..4, 2..5, -1..4, 1..2, 0..5]";
    let o = ladder(&["weyl-member", "--rank", "6", "--target", target, "--factors", factors]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("holds"));
    let witness =
        "w[-1..2]; w[2..3]; w[3..8]^-1; w[4..7]^-1; w[5..9]^-1; w[0..4] * w[0..6]^-1; w[2..3]^-1 * w[1..3]; w[2..6]^-1 * w[2..5] * w[0..6]";
    let o = ladder(&[
        "weyl-member",
        "--rank",
        "6",
        "--target",
        target,
        "--factors",
        factors,
        "--witness",
        witness,
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = ladder(&[
        "weyl-member",
        "--rank",
        "6",
        "--target",
        target,
        "--factors",
        factors,
        "--node-budget",
        "5",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("inconclusive"));
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
    let o = ladder(&["weyl-member", "--rank", "6", "--target", "w[-1..2]", "--factors", "[0..3]"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn window_and_flags() {
    let o = ladder(&["--format", "json", "restrict", "--rank", "6", "--s", S, "--sp", SP]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["window"], serde_json::json!({"a": 2, "b": 4, "h": 4}));
    assert_eq!(v["flags"]["almostdual"], true);
    let o = ladder(&["--format", "json", "flags", "--rank", "6", "--s", S, "--sp", SP]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["almostdual"], false);
    let o = ladder(&["restrict", "--rank", "6", "--window", "2:4", "--segment", "0..1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn constructions() {
    let o = ladder(&["construct", "--rank", "6", "--s", S, "--sp", SP, "--mode", "socle-realize"]);
    assert_eq!(stdout(&o), "s  = [0..2, 1..4, 4..5]\ns' = [-1..0, 0..3, 2..4]\n");
    let o = ladder(&[
        "construct",
        "--rank",
        "4",
        "--s",
        "[0..3, 1..4]",
        "--sp",
        "[-2..0, -1..1]",
        "--mode",
        "extend",
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_suites() {
    for (suite, rank) in [("formulas", "5"), ("lemmas", "4"), ("paper-examples", "4")] {
        let o = ladder(&["verify", suite, "--rank", rank]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(!stdout(&o).contains("FAIL"));
    }
    let o = ladder(&["verify", "lemmas", "--rank", "3", "--cap-paths", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("INCONCLUSIVE"));
}

#[test]
fn qchar_and_pichain() {
    let o = ladder(&["--format", "json", "qchar", "--rank", "4", "--ladder", "[0..2, 1..3]"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dimension"].as_u64().unwrap() as usize, v["weights"].as_array().unwrap().len());
    let o = ladder(&["pichain", "--rank", "6", "--s", S, "--sp", SP, "--census"]);
    let out = stdout(&o);
    assert!(out.contains("pi_1 = "));
    assert_eq!(out.lines().skip_while(|l| !l.starts_with("highest")).count(), 3);
}

#[test]
fn thread_count_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_ladder"))
        .args(["census", "c1", "--rank", "4", "--seed-canonical"])
        .env("LADDER_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    for bad in ["x", "0"] {
        let o = Command::new(env!("CARGO_BIN_EXE_ladder"))
            .args(["paths", "--rank", "3", "--segment", "0..1"])
            .env("LADDER_THREADS", bad)
            .output()
            .unwrap();
        assert_eq!(o.status.code(), Some(2));
    }
}
