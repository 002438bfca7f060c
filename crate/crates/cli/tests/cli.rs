use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn sdo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sdo")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_graph(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn build_reports_the_three_path_split() {
    let dir = tempfile::tempdir().unwrap();
    let g = write_graph(dir.path(), "p3.txt", "3 2\n0 1\n1 2\n");
    let out = sdo(&["build", &g, "0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("n\t3\n"));
    assert!(text.contains("m\t2\n"));
    assert!(text.contains("tree depth\t1\n"));
    assert!(text.contains("leaves\t2\n"));
    assert!(Path::new(&format!("{g}.oracle")).exists());
}

#[test]
fn saved_oracle_round_trips_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let g = write_graph(dir.path(), "c.txt", "# 5-cycle with a chord\n5 6\n0 1\n1 2\n2 3\n3 4\n4 0\n1 3\n");
    assert!(sdo(&["build", &g, "0"]).status.success());
    let first = fs::read(format!("{g}.oracle")).unwrap();
    // rebuilding from the same graph writes the same bytes
    assert!(sdo(&["build", &g, "0"]).status.success());
    assert_eq!(fs::read(format!("{g}.oracle")).unwrap(), first);

    let oracle = format!("{g}.oracle");
    assert_eq!(stdout(&sdo(&["ssrp", &oracle, "0"])), stdout(&sdo(&["ssrp", &g, "0"])));
}

#[test]
fn query_on_a_bridge_prints_inf() {
    let dir = tempfile::tempdir().unwrap();
    let g = write_graph(dir.path(), "p3.txt", "3 2\n0 1\n1 2\n");
    let out = sdo(&["query", &g, "0", "2", "1", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "INF\n");
}

#[test]
fn query_around_a_four_cycle() {
    let dir = tempfile::tempdir().unwrap();
    let g = write_graph(dir.path(), "c4.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n");
    assert_eq!(stdout(&sdo(&["query", &g, "0", "2", "0", "1"])), "2\n");
    assert_eq!(stdout(&sdo(&["ssrp", &g, "0"])), "1\t0\t1\t3\n2\t0\t1\t2\n2\t1\t2\t2\n3\t0\t3\t3\n");
}

#[test]
fn oracle_for_another_source_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let g = write_graph(dir.path(), "p3.txt", "3 2\n0 1\n1 2\n");
    assert!(sdo(&["build", &g, "0"]).status.success());
    let out = sdo(&["query", &format!("{g}.oracle"), "1", "2", "1", "2"]);
    assert!(!out.status.success());
}

#[test]
fn parse_errors_name_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let g = write_graph(dir.path(), "bad.txt", "3 2\n0 1\n# comment\n1 7\n");
    let out = sdo(&["ssrp", &g, "0"]);
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 4"), "{err}");
}

#[test]
fn verify_passes_on_seeded_graphs() {
    let out = sdo(&["verify", "--seed", "3", "--count", "50", "--max-n", "120"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).starts_with("ok: 50 graphs"));
}

#[test]
fn verify_dumps_a_reproducible_failure() {
    let args = ["verify", "--seed", "1", "--count", "30", "--no-left-recursion"];
    let first = sdo(&args);
    assert!(!first.status.success());
    let text = stdout(&first);
    assert!(text.starts_with("MISMATCH"));
    assert!(text.contains("# reduced graph"));
    assert_eq!(stdout(&sdo(&args)), text);
}

#[test]
fn verify_accepts_a_graph_file() {
    let dir = tempfile::tempdir().unwrap();
    let g = write_graph(dir.path(), "c4.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n");
    let out = sdo(&["verify", "--graph", &g, "--source", "2"]);
    assert!(out.status.success());
}

#[test]
fn bench_prints_one_row_per_size() {
    let out = sdo(&["bench", "--sizes", "64,128", "--queries", "100"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[0], "n\tm\tbuild_ms\tmax_dep\tmean_query_us");
    assert!(lines[1].starts_with("64\t") && lines[2].starts_with("128\t"));
}
