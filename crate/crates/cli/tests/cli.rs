use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclestat"))
        .args(args)
        .env_remove("CYCLESTAT_CLASS_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_str(stdout(out).trim()).unwrap()
}

#[test]
fn stats_running_example() {
    let out = run(&["stats", "(5,2,1)(6)(8)(11,9,10,4,3,7)"]);
    assert!(out.status.success());
    let v = json(&out);
    for (key, want) in [
        ("exc", 4),
        ("cval", 3),
        ("cpk", 3),
        ("cdasc", 1),
        ("cddes", 2),
        ("fix", 2),
    ] {
        assert_eq!(v[key], want, "{key}");
    }
    assert_eq!(v["cycle_type"], serde_json::json!([1, 1, 3, 6]));
}

#[test]
fn stats_identity_and_errors() {
    let v = json(&run(&["stats", "1,2,3", "--cycles"]));
    assert_eq!(v["fix"], 3);
    assert_eq!(v["exc"], 0);
    assert_eq!(v["cycle_form"], "(1)(2)(3)");
    let bad = run(&["stats", "2,2,1"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("error"));
}

#[test]
fn orbits() {
    let v = json(&run(&["orbit", "2,3,1", "--members"]));
    assert_eq!(v["size"], 2);
    assert_eq!(v["members"], serde_json::json!(["2,3,1", "3,1,2"]));
    assert_eq!(json(&run(&["orbit", "1,2,3"]))["size"], 1);
    assert_eq!(
        json(&run(&["orbit", "(5,2,1)(6)(8)(11,9,10,4,3,7)"]))["size"],
        8
    );
}

#[test]
fn distributions() {
    let joint = stdout(&run(&["dist", "1,5,5", "--stat", "joint"]));
    assert!(joint.starts_with("1386*s^2*t^2 + 8316*s^2*t^3"));
    assert!(joint.contains("177408*s^4*t^5"));
    assert_eq!(
        stdout(&run(&["dist", "1,1,1", "--stat", "exc"])).trim(),
        "1"
    );
    assert_eq!(stdout(&run(&["dist", "3", "--stat", "cval"])).trim(), "2*t");
    let v = json(&run(&[
        "dist", "1^1 5^2", "--stat", "cval", "--format", "json",
    ]));
    assert_eq!(v["text"], "88704*t^2 + 354816*t^3 + 354816*t^4");
    assert_eq!(v["spec"]["lambda"], serde_json::json!([1, 5, 5]));
}

#[test]
fn guardrail_has_its_own_exit_code() {
    let out = Command::new(env!("CARGO_BIN_EXE_cyclestat"))
        .args(["dist", "n=6,k=0"])
        .env("CYCLESTAT_CLASS_CAP", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(run(&["dist", "n=6,k=9"]).status.code(), Some(2));
}

#[test]
fn verify_claims() {
    let out = run(&["verify", "brenti", "--lambda", "1,1"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim(),
        r#"{"claim":"brenti","instance":{"lambda":[1,1]},"verdict":"pass"}"#
    );

    let out = run(&["verify", "theorem1", "--n-max", "7"]);
    assert!(out.status.success());
    let lines: Vec<Value> = stdout(&out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    // partitions of 1..=7
    assert_eq!(lines.len(), 1 + 2 + 3 + 5 + 7 + 11 + 15);
    assert!(lines.iter().all(|l| l["verdict"] == "pass"));

    assert!(run(&["verify", "all", "--n-max", "6"]).status.success());
    assert_eq!(run(&["verify", "theorem3"]).status.code(), Some(2));
    assert_eq!(
        run(&["verify", "cor3", "--lambda", "1,1"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_output_is_deterministic() {
    let a = stdout(&run(&["verify", "all", "--n-max", "5"]));
    let b = stdout(&run(&["verify", "all", "--n-max", "5"]));
    assert_eq!(a, b);
}

#[test]
fn tables() {
    let eul = stdout(&run(&[
        "table", "eulerian", "--n-max", "4", "--format", "csv",
    ]));
    assert_eq!(eul.lines().next(), Some("n,c0,c1,c2,c3,c4"));
    assert_eq!(eul.lines().last(), Some("4,0,1,11,11,1"));

    assert_eq!(
        stdout(&run(&["table", "snki", "--n-max", "1"])),
        "n,k,i,count\n1,1,0,1\n"
    );

    let snki = stdout(&run(&["table", "snki", "--n-max", "5"]));
    assert!(snki.contains("\n3,0,1,2\n"));
    assert!(snki.contains("\n3,1,1,3\n"));
    let total: u64 = snki
        .lines()
        .skip(1)
        .filter(|l| l.starts_with("5,"))
        .map(|l| l.rsplit(',').next().unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(total, 120);

    let gamma: Value = serde_json::from_str(&stdout(&run(&[
        "table", "gamma", "--n-max", "5", "--format", "json",
    ])))
    .unwrap();
    let five = gamma
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["lambda"] == serde_json::json!([5]))
        .unwrap();
    // E_(5)(t) = A_4(t) = t(1+t)^3 + 8t^2(1+t)
    assert_eq!(five["width"], 5);
    assert_eq!(five["gamma"], serde_json::json!(["0", "1", "8"]));
}

#[test]
fn table_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("eulerian.json");
    let out = run(&[
        "table",
        "eulerian",
        "--n-max",
        "3",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(
        v[3]["coefficients"],
        serde_json::json!(["0", "1", "4", "1"])
    );
}

#[test]
fn bad_flags_are_rejected() {
    assert_eq!(
        run(&["table", "snki", "--format", "xml"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["table", "snki", "--n-max", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["dist", "3", "--stat", "des"]).status.code(), Some(2));
}
