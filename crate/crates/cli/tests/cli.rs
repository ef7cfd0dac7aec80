use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn reltak(args: &[&str]) -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_reltak"));
    c.args(args);
    for var in [
        "RELTAK_CHAR",
        "RELTAK_MAX_T",
        "RELTAK_SEED",
        "RELTAK_JSON",
        "RELTAK_PARALLEL",
        "RELTAK_GEN_CAP",
    ] {
        c.env_remove(var);
    }
    c
}

fn run(args: &[&str]) -> Output {
    reltak(args).output().unwrap()
}

fn arg(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn schema() -> jsonschema::Validator {
    let text = include_str!("../schema/report.schema.json");
    jsonschema::validator_for(&serde_json::from_str(text).unwrap()).unwrap()
}

/// Parses stdout and checks it against the report schema.
fn report(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let errors: Vec<String> = schema().iter_errors(&v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}");
    v
}

#[test]
fn profile_of_cm_pair() {
    let dir = TempDir::new().unwrap();
    let j = write(&dir, "j.txt", "ring x1..x3;\nideal x1*x2*x3;\n");
    let i = write(&dir, "i.txt", "ring x1..x3;\nideal x1*x2, x1*x3;\n");
    let v = report(&run(&[
        "--json",
        "lc",
        "--J",
        arg(&j),
        "--I",
        arg(&i),
        "--profile",
    ]));
    assert_eq!(v["command"], "lc");
    assert_eq!(v["result"]["is_CM"], true);
    assert_eq!(v["result"]["dim"], 2);
    let table = v["result"]["table"].as_array().unwrap();
    let keys: Vec<(i64, Vec<i64>)> = table
        .iter()
        .map(|e| {
            (
                e["i"].as_i64().unwrap(),
                e["a"]
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|x| x.as_i64().unwrap())
                    .collect(),
            )
        })
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn sr_ring_of_two_disjoint_edges_is_not_cm() {
    let dir = TempDir::new().unwrap();
    let c = write(&dir, "c.txt", "complex on 4: {1,2},{3,4};\n");
    let v = report(&run(&["--json", "cm-check", "--complex", arg(&c)]));
    assert_eq!(v["result"]["is_CM"], false);
    assert_eq!(v["result"]["depth"], 1);
    assert_eq!(v["result"]["is_gCM"], true);
}

#[test]
fn malformed_ideal_exits_one() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.txt", "ring x1..x3;\nideal x1*x4;\n");
    let out = run(&["cm-check", "--J", arg(&bad), "--I", arg(&bad)]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["lc"]).status.code(), Some(1));
    assert_eq!(run(&["--char", "4", "fuzz"]).status.code(), Some(1));
    assert_eq!(
        run(&["homology", "/nonexistent/file"]).status.code(),
        Some(1)
    );
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn injected_ses_fault_exits_two() {
    let dir = TempDir::new().unwrap();
    let c = write(&dir, "c.txt", "complex on 3: {1,2},{3};\n");
    assert!(run(&["lc", "--complex", arg(&c), "--profile"])
        .status
        .success());
    let out = run(&[
        "--inject-fault",
        "ses",
        "lc",
        "--complex",
        arg(&c),
        "--profile",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("ses"));
}

#[test]
fn json_is_deterministic_and_thread_independent() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.txt", "graph on 5: 1-2, 2-3, 3-4, 4-5, 5-1;\n");
    let base = run(&[
        "--json",
        "--max-t",
        "3",
        "discrepancy",
        arg(&g),
        "--with-cm",
    ]);
    report(&base);
    for threads in ["1", "3"] {
        let again = run(&[
            "--json",
            "--max-t",
            "3",
            "--parallel",
            threads,
            "discrepancy",
            arg(&g),
            "--with-cm",
        ]);
        assert_eq!(base.stdout, again.stdout);
    }
}

#[test]
fn environment_overrides_flags() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.txt", "graph on 3: 1-2, 2-3, 3-1;\n");
    let out = reltak(&["symbolic", arg(&g)])
        .env("RELTAK_JSON", "true")
        .env("RELTAK_MAX_T", "2")
        .env("RELTAK_CHAR", "3")
        .output()
        .unwrap();
    let v = report(&out);
    assert_eq!(v["characteristic"], 3);
    let powers = v["result"]["powers"].as_array().unwrap();
    assert_eq!(powers.len(), 2);
    assert_eq!(powers[0]["equal"], true);
    assert_eq!(powers[1]["equal"], false);
}

#[test]
fn degree_complex_void_and_empty_face() {
    let dir = TempDir::new().unwrap();
    let i = write(&dir, "i.txt", "ring x1..x3;\nideal x1*x2, x2*x3;\n");
    let void = report(&run(&[
        "--json",
        "degree-complex",
        "--ideal",
        arg(&i),
        "--multidegree",
        "1,1,0",
    ]));
    assert_eq!(void["result"]["kind"], "void");
    assert_eq!(void["result"]["facets"], serde_json::json!([]));
    let empty = report(&run(&[
        "--json",
        "degree-complex",
        "--ideal",
        arg(&i),
        "--multidegree",
        "-1,0,-1",
    ]));
    assert_eq!(empty["result"]["kind"], "empty_face");
    assert_eq!(empty["result"]["facets"], serde_json::json!([[]]));
}

#[test]
fn homology_of_a_circle() {
    let dir = TempDir::new().unwrap();
    let c = write(&dir, "c.txt", "complex on 3: {1,2},{2,3},{1,3};\n");
    let v = report(&run(&["--json", "homology", arg(&c)]));
    assert_eq!(
        v["result"]["cohomology"],
        serde_json::json!([{"degree": 1, "dim": 1}])
    );
    assert_eq!(v["result"]["euler_characteristic"], -1);
    let text = run(&["homology", arg(&c)]);
    assert!(String::from_utf8_lossy(&text.stdout).contains("H~^1 = 1"));
}

#[test]
fn five_cycle_graph_commands() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.txt", "graph on 5: 1-2, 2-3, 3-4, 4-5, 5-1;\n");
    let v = report(&run(&[
        "--json",
        "--max-t",
        "3",
        "cm-edge",
        arg(&g),
        "--colon",
        "1",
        "--gcm",
        "3",
    ]));
    assert_eq!(v["result"]["criterion"], true);
    assert_eq!(v["result"]["dims"], serde_json::json!([-1, -1, 0]));
    assert_eq!(
        v["result"]["census"]["induced_odd_cycles"],
        serde_json::json!([[1, 2, 3, 4, 5]])
    );
    assert_eq!(v["result"]["gcm"]["is_gCM"], true);
}

#[test]
fn matroid_and_fuzz() {
    let dir = TempDir::new().unwrap();
    let c = write(
        &dir,
        "c.txt",
        "complex on 4: {1,2},{1,3},{1,4},{2,3},{2,4},{3,4};\n",
    );
    let v = report(&run(&[
        "--json",
        "--max-t",
        "2",
        "matroid",
        arg(&c),
        "--cm",
    ]));
    assert_eq!(v["result"]["is_matroid"], true);
    let entries = v["result"]["symbolic_quotients"]["entries"]
        .as_array()
        .unwrap();
    assert!(entries.iter().all(|e| e["is_CM"] == true));
    let a = run(&["--json", "--seed", "7", "fuzz", "--cases", "10"]);
    let b = run(&["--json", "--seed", "7", "fuzz", "--cases", "10"]);
    report(&a);
    assert_eq!(a.stdout, b.stdout);
}
