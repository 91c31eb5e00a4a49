use std::path::Path;
use std::process::{Command, Output};

use liftcut::fixtures;
use liftcut::io::write_instance;

fn liftcut(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liftcut"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn enum_on_triangle() {
    let dir = tempfile::tempdir().unwrap();
    let tri = write(dir.path(), "tri.json", &write_instance(&fixtures::triangle().instance));
    let out = liftcut(&["enum", "--instance", &tri]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "4 feasible vectors\n");
    let all = stdout(&liftcut(&["enum", "--instance", &tri, "--all"]));
    assert_eq!(all.lines().count(), 6, "{all}");
}

#[test]
fn check_box_witness_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let ex = fixtures::box_cycle_violation();
    let file = write(dir.path(), "cycle.json", &write_instance(&ex.instance));
    let uw = ex.edge("u", "w").to_string();
    let out = liftcut(&["check-box", "--instance", &file, "--edge", &uw]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).starts_with("not facet; cycle witness: "));
    let json = liftcut(&["check-box", "--instance", &file, "--edge", &uw, "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v["facet"], false);
    assert_eq!(v["witness"]["kind"], "cycle");
}

#[test]
fn usage_and_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(liftcut(&["no-such-command"]).status.code(), Some(1));
    let broken = write(dir.path(), "broken.json", "{\"nodes\": 2, \"edges\": [[0, 1]");
    assert_eq!(liftcut(&["enum", "--instance", &broken]).status.code(), Some(2));
    let missing = dir.path().join("missing.json");
    assert_eq!(
        liftcut(&["enum", "--instance", missing.to_str().unwrap()]).status.code(),
        Some(2)
    );
    let tri = write(dir.path(), "tri.json", &write_instance(&fixtures::triangle().instance));
    assert_eq!(
        liftcut(&["check-cut", "--instance", &tri, "--f", "1,2", "--delta", "0-1,0-2,1-2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        liftcut(&["check-cut", "--instance", &tri, "--f", "0,1", "--delta", "0-1"]).status.code(),
        Some(1)
    );
}

#[test]
fn reduction_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cnf = write(dir.path(), "clause.cnf", "p cnf 3 1\n-1 2 3 0\n");
    let target = dir.path().join("clause.json");
    let target = target.to_str().unwrap();
    let out = liftcut(&["reduce-3sat", "--cnf", &cnf, "--out", target, "--verify"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("14 nodes"));
    let delta = write(dir.path(), "delta.txt", "1-6, 2-9, 3-11, 4-5, 4-13\n");
    let out = liftcut(&["check-cut", "--instance", target, "--f", "0-12", "--delta", &delta]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let dot = stdout(&liftcut(&["export-dot", "--instance", target]));
    assert!(dot.contains("style=dashed") && dot.contains("color=red"));
}

#[test]
fn sweep_up_to_five_nodes() {
    let dir = tempfile::tempdir().unwrap();
    let out = liftcut(&["sweep", "--max-nodes", "5", "--out-dir", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("0 disagreements\n"), "{}", stdout(&out));
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 0);
}
