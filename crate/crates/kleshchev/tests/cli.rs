//! End-to-end tests of the binary: exit-code contract and output shapes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kleshchev"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("exit code")
}

#[test]
fn is_kleshchev_exit_codes() {
    let yes = run(&["--e", "4", "--m", "2", "is-kleshchev", "3,2|4,2,1"]);
    assert_eq!(code(&yes), 0);
    assert_eq!(stdout(&yes).trim(), "true");

    let yes_rec = run(&[
        "--e",
        "4",
        "--m",
        "2",
        "is-kleshchev",
        "3,2|4,2,1",
        "--method",
        "recursive",
    ]);
    assert_eq!(code(&yes_rec), 0);

    // (1), (-) is not Kleshchev at e=2, m=0 but its components are
    // e-restricted, so this exercises the containment test, not the
    // restriction shortcut.
    let no = run(&["--e", "2", "--m", "0", "is-kleshchev", "1|-"]);
    assert_eq!(code(&no), 1);
    assert_eq!(stdout(&no).trim(), "false");
}

#[test]
fn is_restricted_exit_codes() {
    assert_eq!(
        code(&run(&["--e", "2", "--m", "0", "is-restricted", "-|1"])),
        0
    );
    assert_eq!(
        code(&run(&["--e", "2", "--m", "0", "is-restricted", "1|-"])),
        1
    );
}

#[test]
fn usage_errors_exit_2() {
    // Missing required options.
    assert_eq!(code(&run(&["is-kleshchev", "1|-"])), 2);
    // Bad params.
    assert_eq!(code(&run(&["--e", "1", "--m", "0", "enumerate", "3"])), 2);
    assert_eq!(code(&run(&["--e", "3", "--m", "3", "enumerate", "3"])), 2);
    // Malformed bipartition.
    assert_eq!(
        code(&run(&["--e", "2", "--m", "0", "is-kleshchev", "1,2|-"])),
        2
    );
    // fock-expand with neither form.
    assert_eq!(code(&run(&["--e", "2", "--m", "0", "fock-expand"])), 2);
    // Residue out of range.
    assert_eq!(
        code(&run(&[
            "--e",
            "2",
            "--m",
            "0",
            "fock-expand",
            "--word",
            "0,2"
        ])),
        2
    );
}

#[test]
fn optimal_seq_word() {
    let out = run(&["--e", "4", "--m", "2", "optimal-seq", "3,2|4,2,1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).trim(), "2,2,0,3,3,2,1,1,0,0,3,2");

    // Not Kleshchev: an error, exit 2.
    let err = run(&["--e", "2", "--m", "0", "optimal-seq", "1|-"]);
    assert_eq!(code(&err), 2);
}

#[test]
fn roof_base_tau() {
    let roof = run(&["--e", "2", "--m", "0", "roof", "2,1"]);
    assert_eq!(code(&roof), 0);
    let core: kleshchev::Partition = stdout(&roof).trim().parse().unwrap();
    assert!(core.is_e_core(2));

    let base = run(&["--e", "2", "--m", "0", "base", "2,1"]);
    assert_eq!(code(&base), 0);

    let tau = run(&["--e", "3", "--m", "1", "tau", "-"]);
    assert_eq!(code(&tau), 0);
    assert_eq!(stdout(&tau).trim(), "2");

    // tau requires an e-core.
    assert_eq!(code(&run(&["--e", "3", "--m", "1", "tau", "3"])), 2);

    // JSON trace carries the input, the steps and the result.
    let json = run(&["--e", "2", "--m", "0", "--format", "json", "roof", "2,1"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(value["input"], "2,1");
    assert!(value["steps"].is_array());
    assert!(value["result"].is_string());
}

#[test]
fn fock_expand_forms_agree() {
    let by_shape = run(&[
        "--e",
        "2",
        "--m",
        "0",
        "--format",
        "json",
        "fock-expand",
        "-|1,1",
    ]);
    assert_eq!(code(&by_shape), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&by_shape)).unwrap();
    let entries = value.as_array().unwrap();
    assert!(entries
        .iter()
        .any(|entry| entry["bipartition"] == "-|1,1" && entry["coeff"]["0"] == 1));

    let by_word = run(&[
        "--e",
        "2",
        "--m",
        "0",
        "--format",
        "json",
        "fock-expand",
        "--word",
        "0,1",
    ]);
    assert_eq!(code(&by_word), 0);
    assert_eq!(stdout(&by_shape), stdout(&by_word));
}

#[test]
fn verify_passes_and_is_deterministic() {
    let first = run(&[
        "--e",
        "3",
        "--m",
        "1",
        "--format",
        "json",
        "verify",
        "--max-rank",
        "6",
    ]);
    assert_eq!(code(&first), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout(&first)).unwrap();
    assert_eq!(report["verdict"], "pass");
    assert_eq!(report["params"]["e"], 3);
    assert_eq!(report["params"]["m"], 1);
    assert_eq!(report["max_rank"], 6);
    assert_eq!(report["ranks"].as_array().unwrap().len(), 7);

    let second = run(&[
        "--e",
        "3",
        "--m",
        "1",
        "--format",
        "json",
        "verify",
        "--max-rank",
        "6",
    ]);
    assert_eq!(stdout(&first), stdout(&second));

    // Thread count must not change the report either.
    let single = run(&[
        "--e",
        "3",
        "--m",
        "1",
        "--threads",
        "1",
        "--format",
        "json",
        "verify",
        "--max-rank",
        "6",
    ]);
    assert_eq!(stdout(&first), stdout(&single));
}

#[test]
fn crystal_graph_formats() {
    let dot = run(&["--e", "2", "--m", "0", "crystal-graph", "--max-rank", "2"]);
    assert_eq!(code(&dot), 0);
    let text = stdout(&dot);
    assert!(text.starts_with("digraph"));
    assert!(text.contains("-|1"));

    let json = run(&[
        "--e",
        "2",
        "--m",
        "0",
        "--format",
        "json",
        "crystal-graph",
        "--max-rank",
        "2",
    ]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(value["nodes"].as_array().unwrap().len(), 4);
}

#[test]
fn enumerate_and_abacus() {
    let out = run(&["--e", "2", "--m", "0", "enumerate", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().count(), 5);

    let abacus = run(&[
        "--e", "3", "--m", "0", "--format", "json", "abacus", "2,1", "--charge", "1",
    ]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&abacus)).unwrap();
    assert_eq!(value["charge"], 1);
    let window: Vec<i64> = value["window"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_i64().unwrap())
        .collect();
    assert!(window.windows(2).all(|pair| pair[0] > pair[1]));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("kleshchev-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("enumerate.txt");
    let out = run(&[
        "--e",
        "2",
        "--m",
        "0",
        "--out",
        path.to_str().unwrap(),
        "enumerate",
        "1",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "-|1\n1|-\n");
}
