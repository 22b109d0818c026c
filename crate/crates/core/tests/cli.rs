use std::path::PathBuf;
use std::process::{Command, Output};

fn cfa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cfa")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cfa-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn machine_files_round_trip_through_commands() {
    let lsp = scratch("lsp.cfa");
    let split = scratch("split.cfa");
    let lsp_s = lsp.to_str().unwrap();
    assert!(cfa(&["family", "machine", "--name", "Lsp", "--n", "2", "-o", lsp_s]).status.success());
    let o = cfa(&["gap", "--machine", lsp_s, "--input", "00#0"]);
    assert_eq!(stdout(&o).trim(), "1");
    let o = cfa(&["count", "--machine", lsp_s, "--input", "00#0"]);
    assert_eq!(stdout(&o).trim(), "accepting=3 rejecting=2 improper=0");
    assert!(cfa(&["construct", "split", lsp_s, "-o", split.to_str().unwrap()]).status.success());
    let o = cfa(&["gap", "--machine", split.to_str().unwrap(), "--input", "00#0"]);
    assert_eq!(stdout(&o).trim(), "3");
    let o = cfa(&["pfa", "--machine", lsp_s, "--input", "0#0"]);
    assert_eq!(stdout(&o).trim(), "accept=1/16 reject=15/16 other=0");
}

#[test]
fn family_commands() {
    let o = cfa(&["family", "gen", "--name", "LU", "--n", "1"]);
    assert_eq!(stdout(&o), "0#0\n0#1\n1#0\n1#1\n");
    let o = cfa(&["family", "classify", "--name", "Lsp", "--n", "1", "--input", "00#0"]);
    assert_eq!(stdout(&o).trim(), "Positive");
    let o = cfa(&["family", "machine", "--name", "LblockU", "--n", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn analysis_commands() {
    let o = cfa(&["analyze", "funop", "intdiv", "7", "2"]);
    assert_eq!(stdout(&o).trim(), "3");
    let o = cfa(&["analyze", "funop", "intdiv", "7", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = cfa(&["analyze", "sign-pattern", "--name", "Lsp", "--n", "1", "--prefixes", "0,00", "--suffix", "#0"]);
    assert_eq!(stdout(&o).trim(), "01");
    let m = scratch("lspx.cfa");
    let ms = m.to_str().unwrap();
    assert!(cfa(&["family", "machine", "--name", "Lsp", "--n", "1", "-o", ms]).status.success());
    let o = cfa(&["analyze", "cequal-extension", "--machine", ms, "--name", "Lsp", "--n", "1", "--m", "5", "--l", "2", "--z", "#0"]);
    assert!(o.status.success());
    assert!(stdout(&o).ends_with("PASS\n"));
}

#[test]
fn verify_exit_codes_and_determinism() {
    let a = cfa(&["verify", "--suite", "semantics", "--seed", "5"]);
    assert_eq!(a.status.code(), Some(0));
    let b = cfa(&["verify", "--suite", "semantics", "--seed", "5"]);
    assert_eq!(a.stdout, b.stdout);
    let c = cfa(&["verify", "--suite", "constructions", "--seed", "5", "--controls"]);
    assert_eq!(c.status.code(), Some(1));
    assert!(stdout(&c).contains("FAIL Control.Nvscequal.split"));
    assert_eq!(cfa(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(cfa(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn parse_errors_exit_two() {
    let bad = scratch("bad.cfa");
    std::fs::write(&bad, "kind nfa\nalphabet a\nstates 2\nstart 0\naccept 1\nreject 1\n").unwrap();
    let o = cfa(&["count", "--machine", bad.to_str().unwrap(), "--input", "a"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
}
