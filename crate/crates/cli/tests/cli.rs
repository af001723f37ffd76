use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_comtrans"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = run(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn table<'a>(v: &'a Value, name: &str) -> &'a Value {
    v["tables"]
        .as_array()
        .unwrap()
        .iter()
        .find(|t| t["name"] == name)
        .unwrap_or_else(|| panic!("no table {name}"))
}

fn rows<'a>(v: &'a Value, name: &str) -> &'a Vec<Value> {
    table(v, name)["rows"].as_array().unwrap()
}

#[test]
fn ct_groebner_rules_and_matrices() {
    let v = run_json(&["ct-groebner", "--dump-matrix"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["subcommand"], "ct-groebner");
    assert_eq!(rows(&v, "rules").len(), 7);
    assert_eq!(rows(&v, "rules")[4], serde_json::json!(["[x,y,z]", "-[y,x,z]"]));
    assert_eq!(rows(&v, "relation_matrix").len(), 18);
    assert_eq!(rows(&v, "rcf").len(), 7);

    let text = run(&["ct-groebner", "--dump-matrix"]);
    let s = String::from_utf8(text.stdout).unwrap();
    assert!(s.contains("18 12\n"));
    assert!(s.contains("7 12\n"));
}

#[test]
fn ct_dim_counts_and_limits() {
    let v = run_json(&["ct-dim", "2"]);
    assert_eq!(rows(&v, "dimension")[0], serde_json::json!([2, "250", "250", true]));
    let v = run_json(&["ct-dim", "0"]);
    assert_eq!(rows(&v, "dimension")[0][1], "1");
    let v = run_json(&["ct-dim", "4", "--method", "structural"]);
    assert_eq!(rows(&v, "dimension")[0][1], "9625000");
    assert_eq!(run(&["ct-dim", "4", "--method", "enumerate"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(run(&["bogus"]).status.code(), Some(64));
    assert_eq!(run(&["identities", "--degree", "3", "--ops", "xyz"]).status.code(), Some(64));
    assert_eq!(run(&["identities", "--degree", "4", "--ops", "com"]).status.code(), Some(64));
    assert_eq!(run(&["degree7", "--ops", "com", "--partition", "43x"]).status.code(), Some(64));
    assert_eq!(run(&["degree7", "--ops", "com", "--partition", "42"]).status.code(), Some(64));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn identities_degree3_and_5() {
    let v = run_json(&["identities", "--degree", "3", "--ops", "both"]);
    let k = &rows(&v, "kernel")[0];
    assert_eq!((k[0].as_u64(), k[1].as_u64()), (Some(5), Some(7)));
    let ids = v["identities"].as_array().unwrap();
    assert_eq!(ids.len(), 3);
    assert!(ids.iter().all(|i| i["verified"] == true));

    let v = run_json(&["identities", "--degree", "5", "--ops", "com"]);
    assert_eq!(rows(&v, "ranks")[0], serde_json::json!([270, 290, 20, 290]));
    let v = run_json(&["identities", "--degree", "5", "--ops", "wac"]);
    assert_eq!(rows(&v, "new_module")[0][0], 141);
}

#[test]
fn degree7_single_partition() {
    let v = run_json(&["degree7", "--ops", "tra", "--partition", "52"]);
    assert_eq!(rows(&v, "multiplicities")[0], serde_json::json!(["52", 14, 156, 157, 1]));
}

#[test]
fn json_is_stable_across_runs_and_threads() {
    let args = ["degree7", "--ops", "com", "--partition", "61", "--format", "json"];
    let one = Command::new(env!("CARGO_BIN_EXE_comtrans"))
        .args(args)
        .env("COMTRANS_THREADS", "1")
        .output()
        .unwrap();
    let two = Command::new(env!("CARGO_BIN_EXE_comtrans"))
        .args(args)
        .env("COMTRANS_THREADS", "3")
        .output()
        .unwrap();
    assert!(one.status.success());
    assert_eq!(one.stdout, two.stdout);
    let a = run(&["envelope", "T", "--format", "json"]).stdout;
    let b = run(&["envelope", "T", "--format", "json"]).stdout;
    assert_eq!(a, b);
    let bad = Command::new(env!("CARGO_BIN_EXE_comtrans"))
        .args(args)
        .env("COMTRANS_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(64));
}

#[test]
fn envelopes() {
    let c = run_json(&["envelope", "C"]);
    assert_eq!(rows(&c, "groebner_basis").len(), 16);
    assert_eq!(c["params"]["dimension"], 9);
    assert_eq!(c["params"]["finite"], true);
    let dims: Vec<u64> = rows(&c, "wedderburn").iter().map(|r| r[1].as_u64().unwrap()).collect();
    assert_eq!(dims, [1, 4, 4]);
    assert_eq!(rows(&c, "printed_table_discrepancies").len(), 2);

    let t = run_json(&["envelope", "T", "--max-degree", "6"]);
    assert_eq!(rows(&t, "groebner_basis").len(), 16);
    assert_eq!(t["params"]["finite"], false);
    assert_eq!(rows(&t, "generators")[0][2], 143);

    let ct = run_json(&["envelope", "CT"]);
    assert_eq!(rows(&ct, "groebner_basis"), rows(&c, "groebner_basis"));
}

#[test]
fn envelope_save_load_and_cap() {
    let dir = std::env::temp_dir().join(format!("comtrans-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let saved = dir.join("gb.txt");
    let s = saved.to_str().unwrap();
    let first = run_json(&["envelope", "C", "--save", s]);
    let text = std::fs::read_to_string(&saved).unwrap();
    assert_eq!(text.lines().count(), 16);
    assert!(text.contains("+1*cab -1*d"));
    let again = run_json(&["envelope", "C", "--load", s]);
    assert_eq!(rows(&again, "groebner_basis"), rows(&first, "groebner_basis"));

    let braid = dir.join("braid.txt");
    std::fs::write(&braid, "+1*aba -1*bab\n").unwrap();
    let out = run(&["envelope", "C", "--load", braid.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    std::fs::remove_dir_all(&dir).unwrap();
}
