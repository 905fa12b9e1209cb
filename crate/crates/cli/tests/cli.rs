use std::path::Path;
use std::process::{Command, Output};

use transynth_cli::fst::parse_fst;

fn bin(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_transynth"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn gen_then_synth_parity() {
    let dir = tempfile::tempdir().unwrap();
    let gen = bin(&["gen", "parity", "2", "-o", "parity.io"], dir.path());
    assert_eq!(gen.status.code(), Some(0));
    let text = std::fs::read_to_string(dir.path().join("parity.io")).unwrap();
    assert!(text.lines().any(|l| l == "01 1"));

    let out = bin(&["synth", "parity.io", "--dot", "parity.dot"], dir.path());
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("n_min: 2"));
    let t = parse_fst(&std::fs::read_to_string(dir.path().join("parity.fst")).unwrap()).unwrap();
    let task = transynth::parse_task(&text).unwrap();
    assert!(t.verify(&task).ok);
    let dot = std::fs::read_to_string(dir.path().join("parity.dot")).unwrap();
    assert!(dot.starts_with("digraph"));

    let run = bin(&["run", "parity.fst", "11"], dir.path());
    assert_eq!(run.status.code(), Some(0));
    assert_eq!(stdout(&run).trim(), "0");
    let run = bin(&["run", "parity.fst", "01", "--trace"], dir.path());
    assert_eq!(stdout(&run), "trajectory: 0 0 1\n1\n");
}

#[test]
fn signal_locator_unsat_below_five() {
    let dir = tempfile::tempdir().unwrap();
    bin(&["gen", "signal-locator", "9", "3", "-o", "sl93.io"], dir.path());
    let out = bin(&["synth", "sl93.io", "--max-states", "4"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("UNSAT up to 4 states"));

    let out = bin(&["synth", "sl93.io", "--dot", "sl.dot"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("n_min: 5"));
    assert!(stdout(&out).contains("unsat: 3 4"));
    assert!(stdout(&out).contains("variables: 15"));
    let dot = std::fs::read_to_string(dir.path().join("sl.dot")).unwrap();
    assert!(dot.lines().any(|l| l.contains("-> nil")));

    // outside the training set the pruned machine may be partial
    let run = bin(&["run", "sl93.fst", "110000000"], dir.path());
    assert_eq!(run.status.code(), Some(1));
    assert!(stderr(&run).contains("undefined transition at position"));
    let run = bin(&["run", "sl93.fst", "000010000"], dir.path());
    assert_eq!(stdout(&run).trim(), "2");
}

#[test]
fn budget_is_reported_not_unsat() {
    let dir = tempfile::tempdir().unwrap();
    bin(&["gen", "palindrome", "5", "-o", "pal5.io"], dir.path());
    let out = bin(
        &["synth", "pal5.io", "--engine", "trajectory", "--budget-nodes", "1000"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("budget exhausted"));
    assert!(!stderr(&out).contains("UNSAT"));
}

#[test]
fn trie_counts() {
    let dir = tempfile::tempdir().unwrap();
    bin(&["gen", "zeroes-or-ones", "4", "--cumulative", "-o", "zo4.io"], dir.path());
    let out = bin(&["trie", "zo4.io"], dir.path());
    assert_eq!(stdout(&out), "trie states: 31\n");
    let out = bin(&["trie", "zo4.io", "--minimize", "-o", "zo4min.fst"], dir.path());
    assert_eq!(stdout(&out), "trie states: 31\nminimized states: 13\n");
    assert_eq!(parse_fst(&std::fs::read_to_string(dir.path().join("zo4min.fst")).unwrap()).unwrap().n_states(), 13);

    std::fs::write(dir.path().join("one.io"), "abc x\n").unwrap();
    let out = bin(&["trie", "one.io"], dir.path());
    assert_eq!(stdout(&out), "trie states: 4\n");
}

#[test]
fn invalid_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(bin(&["gen", "signal-locator", "9", "4"], dir.path()).status.code(), Some(2));
    assert_eq!(bin(&["gen", "parity"], dir.path()).status.code(), Some(2));
    assert_eq!(bin(&["gen", "parity", "2", "--cumulative"], dir.path()).status.code(), Some(2));
    std::fs::write(dir.path().join("bad.io"), "01 1\n01 0\n").unwrap();
    let out = bin(&["synth", "bad.io"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("contradictory"));
    assert_eq!(bin(&["synth", "missing.io"], dir.path()).status.code(), Some(2));

    bin(&["gen", "parity", "2", "-o", "p.io"], dir.path());
    bin(&["synth", "p.io"], dir.path());
    let out = bin(&["run", "p.fst", ""], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("non-empty"));
    assert_eq!(bin(&["run", "p.fst", "012"], dir.path()).status.code(), Some(2));
    assert_eq!(bin(&["frobnicate"], dir.path()).status.code(), Some(2));
}

#[test]
fn undefined_output_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("m.fst"),
        "@states 2\n@initial 0\n@inputs a\n@outputs x\n0 - 1\n1 x 1\n",
    )
    .unwrap();
    let out = bin(&["run", "m.fst", "a"], dir.path());
    assert_eq!(stdout(&out).trim(), "x");
    std::fs::write(
        dir.path().join("m.fst"),
        "@states 2\n@initial 0\n@inputs a\n@outputs x\n0 x 1\n1 - 1\n",
    )
    .unwrap();
    let out = bin(&["run", "m.fst", "aa"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("undefined output at state 1"));
}

#[test]
fn tokens_mode_words() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("t.io"), "@mode tokens\nred,blue warm\nblue,blue cold\n").unwrap();
    let out = bin(&["synth", "t.io", "--engine", "trajectory"], dir.path());
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let out = bin(&["run", "t.fst", "red,blue"], dir.path());
    assert_eq!(stdout(&out).trim(), "warm");
}

#[test]
fn dot_command_and_csv_bench() {
    let dir = tempfile::tempdir().unwrap();
    bin(&["gen", "parity", "2", "-o", "p.io"], dir.path());
    bin(&["synth", "p.io"], dir.path());
    let out = bin(&["dot", "p.fst"], dir.path());
    assert!(stdout(&out).contains("label=\"1:1\""));

    let out = bin(&["bench", "--format", "csv", "--no-timings"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let csv = stdout(&out);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 6);
    assert_eq!(lines[3], "Zeroes and ones 4,5,31,13,5,31,13,ok");
    assert_eq!(lines[4], "Palindrome 4,5,31,12,5,31,12,ok");
}
