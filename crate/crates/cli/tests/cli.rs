use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monoclass")).args(args).output().unwrap()
}

fn run_with_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monoclass")).args(args).env(key, value).output().unwrap()
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_monoclass"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn lines(o: &Output) -> Vec<String> {
    stdout(o).lines().map(str::to_string).collect()
}

#[test]
fn enumerate_labels() {
    let o = run(&["enumerate", "--degree", "3", "--order", "27", "--family", "L1", "--format", "labels"]);
    assert!(o.status.success());
    assert_eq!(lines(&o), vec!["L1;i=0;p=3;Y=1,1,0", "L1;i=1;p=3;Y=1,1,0"]);
    let o = run(&["enumerate", "--degree", "5", "--order", "60", "--format", "labels"]);
    assert_eq!(lines(&o), vec!["U1;p=5;Y=0,0,0"]);
}

#[test]
fn enumerate_json_includes_primitives() {
    let o = run(&["enumerate", "--degree", "2", "--order", "24"]);
    assert!(o.status.success());
    let records: Vec<serde_json::Value> = lines(&o).iter().map(|l| serde_json::from_str(l).unwrap()).collect();
    let prim: Vec<&str> =
        records.iter().filter(|r| r["kind"] == "primitive").map(|r| r["family"].as_str().unwrap()).collect();
    assert_eq!(prim, vec!["A4_a", "A4_b"]);
    assert!(records.iter().any(|r| r["kind"] == "monomial"));
    assert!(records.iter().all(|r| r["order"] == 24));
    let o = run(&["enumerate", "--degree", "2", "--order", "24", "--no-primitive"]);
    assert!(lines(&o).iter().all(|l| l.contains("\"monomial\"")));
}

#[test]
fn coprime_order_warns() {
    let o = run(&["enumerate", "--degree", "3", "--order", "8"]);
    assert!(o.status.success());
    assert!(stdout(&o).is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
}

#[test]
fn counts() {
    assert_eq!(stdout(&run(&["count", "--degree", "3", "--max-order", "2000"])).trim(), "2229");
    assert_eq!(stdout(&run(&["count", "--degree", "5", "--max-order", "10000"])).trim(), "2445");
    assert_eq!(stdout(&run(&["count", "--degree", "7", "--max-order", "6"])).trim(), "0");
    let per = run(&["count", "--degree", "3", "--max-order", "27", "--per-order"]);
    let rows = lines(&per);
    assert_eq!(rows.len(), 27);
    let total: u64 = rows.iter().map(|r| r.split('\t').nth(1).unwrap().parse::<u64>().unwrap()).sum();
    assert_eq!(total.to_string(), stdout(&run(&["count", "--degree", "3", "--max-order", "27"])).trim());
}

#[test]
fn verify_exit_codes() {
    let o = run(&["verify", "--degree", "3", "--max-order", "60"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("0 failures"));
    let o = run_with_env(&["verify", "--degree", "5", "--max-order", "100"], "MONOCLASS_BUDGET", "10");
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("FAIL"));
}

#[test]
fn verify_report_lines() {
    let o = run(&["verify", "--degree", "2", "--max-order", "16", "--deep", "--report"]);
    assert!(o.status.success());
    let rows = lines(&o);
    assert_eq!(rows.len(), 17);
    for row in &rows[..16] {
        let v: serde_json::Value = serde_json::from_str(row).unwrap();
        assert!(v["failures"].as_array().unwrap().is_empty());
    }
}

#[test]
fn export_import_round_trip() {
    let labels = "L1;i=0;p=3;Y=1,1,0\nU1;p=5;Y=0,0,0\nA4_a;deg=2;n=2\n";
    let exported = run_with_stdin(&["export", "--input", "-"], labels);
    assert!(exported.status.success());
    assert_eq!(lines(&exported).len(), 3);
    let imported = run_with_stdin(&["import", "--input", "-"], &stdout(&exported));
    assert!(imported.status.success());
    assert_eq!(stdout(&imported), labels);
}

#[test]
fn error_exit_codes() {
    let o = run_with_stdin(&["export", "--input", "-"], "Z1;p=3;Y=1,1,0\n");
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["enumerate", "--degree", "13", "--order", "156"]);
    assert_eq!(o.status.code(), Some(3));
    let o = run(&["count", "--degree", "9", "--max-order", "9"]);
    assert_eq!(o.status.code(), Some(3));
    let o = run(&["enumerate", "--degree", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["enumerate", "--degree", "3", "--max-order", "300", "--jobs", "2"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout);
}
