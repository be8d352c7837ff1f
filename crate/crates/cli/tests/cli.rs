use std::process::{Command, Output};

use serde_json::Value;

fn lrwkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lrwkit"))
        .args(args)
        .env_remove("LRWKIT_MAX_BOXES")
        .output()
        .expect("run lrwkit")
}

fn json(out: &Output) -> Value {
    let text = String::from_utf8_lossy(&out.stdout);
    serde_json::from_str(text.lines().next().expect("one line")).expect("json line")
}

#[test]
fn wdecomp_json_lists_six_components() {
    let out = lrwkit(&["wdecomp", "3,2,1", "--family", "o"]);
    assert!(out.status.success());
    let v = json(&out);
    let parts: Vec<Value> = v["terms"].as_array().unwrap().iter().map(|t| t["partition"].clone()).collect();
    assert_eq!(serde_json::to_string(&parts).unwrap(), "[[3,2,1],[3,1],[2,2],[2,1,1],[2],[1,1]]");
}

#[test]
fn tsv_output() {
    let out = lrwkit(&["--format", "tsv", "schur", "mult", "1", "1"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "partition\tcoeff\n2\t1\n1,1\t1\n");
}

#[test]
fn lr_with_tableaux() {
    let v = json(&lrwkit(&["lr", "3,2,1", "1,1", "2,1,1", "--tableaux"]));
    assert_eq!(v["coefficient"], 1);
    assert_eq!(v["tableaux"].as_array().unwrap().len(), 1);
}

#[test]
fn box_cap_exits_3() {
    let out = lrwkit(&["wdecomp", "4,4,3", "--family", "sp"]);
    assert_eq!(out.status.code(), Some(3));
    let out = lrwkit(&["--max-boxes", "12", "wdecomp", "4,4,3", "--family", "sp"]);
    assert!(out.status.success());
    let out = Command::new(env!("CARGO_BIN_EXE_lrwkit"))
        .args(["wdecomp", "3,2,1", "--family", "o"])
        .env("LRWKIT_MAX_BOXES", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(lrwkit(&["wdecomp", "1,2", "--family", "o"]).status.code(), Some(2));
    assert_eq!(lrwkit(&["wdecomp", "2,1", "--family", "gl"]).status.code(), Some(2));
    assert_eq!(lrwkit(&["roots", "beta", "A3"]).status.code(), Some(2));
    assert_eq!(lrwkit(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn roots_commands() {
    let v = json(&lrwkit(&["roots", "beta", "D5"]));
    assert_eq!(v["count"], 3);
    assert_eq!(v["betas"][0]["weight"], serde_json::json!([0, 1, 0, 0, 0]));
    let out = lrwkit(&["roots", "commute", "C5"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["violations"], serde_json::json!([]));
    let v = json(&lrwkit(&["roots", "cone", "D5", "--from", "1,1,1,0,0", "--to", "0,2,0,0,0"]));
    assert_eq!(v["solutions"], serde_json::json!([[0, 1, 0]]));
    let v = json(&lrwkit(&["roots", "type-a", "D5", "0,0,1,1,1"]));
    assert_eq!(v["type_a"], true);
}

#[test]
fn fermionic_command() {
    let v = json(&lrwkit(&["fermionic", "C3", "2x1"]));
    assert_eq!(v["terms"], serde_json::json!([{"weight": [0, 0, 0], "mult": "1"}, {"weight": [2, 0, 0], "mult": "1"}]));
    let v = json(&lrwkit(&["fermionic", "B3", "1x2", "--weight", "0,0,0@rank=3"]));
    assert_eq!(v["multiplicity"], "1");
}

#[test]
fn part_and_branch() {
    let v = json(&lrwkit(&["part", "1,2,1@rank=3"]));
    assert_eq!(v["partition"], serde_json::json!([4, 3, 1]));
    assert_eq!(v["conjugate"], serde_json::json!([3, 2, 2, 1]));
    let v = json(&lrwkit(&["branch", "1,1", "--to", "sp"]));
    assert_eq!(v["terms"], serde_json::json!([{"partition": [1, 1], "coeff": 1}, {"partition": [], "coeff": 1}]));
}

#[test]
fn verify_is_deterministic_and_honours_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("empty.toml");
    std::fs::write(&cfg, "").unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let run = |path: &std::path::Path| {
        lrwkit(&["--config", cfg.to_str().unwrap(), "verify", "--out", path.to_str().unwrap()])
    };
    assert!(run(&a).status.success());
    assert!(run(&b).status.success());
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let report: Value = serde_json::from_slice(&std::fs::read(&a).unwrap()).unwrap();
    assert_eq!(report["summary"]["failed"], 0);

    std::fs::write(&cfg, "max_boxes = 2\nformat = \"tsv\"\n").unwrap();
    let out = lrwkit(&["--config", cfg.to_str().unwrap(), "wdecomp", "2,1", "--family", "o"]);
    assert_eq!(out.status.code(), Some(3));
    let out = lrwkit(&["--config", cfg.to_str().unwrap(), "schur", "skew", "2", "1"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "partition\tcoeff\n1\t1\n");
}

#[test]
fn wtensor_reports_equality() {
    let v = json(&lrwkit(&["wtensor", "2,1", "1", "--family", "sp"]));
    assert_eq!(v["equal"], true);
}
