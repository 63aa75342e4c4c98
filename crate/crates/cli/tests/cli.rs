//! Process-level checks of the binary: output bytes, exit codes, parse
//! diagnostics, worker-count invariance, and the fault-injection hook.

use std::process::{Command, Output};

fn splitconf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_splitconf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn census_tsv_matches_library_output() {
    let out = splitconf(&["census", "--n-min", "3", "--n-max", "8", "--tsv"]);
    assert!(out.status.success());
    let rows = splitconf_cli::survey::census_rows(3, 8);
    assert_eq!(stdout(&out), splitconf_cli::survey::census_tsv(&rows));
}

#[test]
fn census_human_table_snapshot() {
    let out = splitconf(&["census", "--n-min", "3", "--n-max", "5"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "n  a  b  c  d  e  f\n\
         3  1  0  0  1  0  0\n\
         4  1  0  0  1  0  0\n\
         5  1  0  0  1  0  0\n"
    );
}

#[test]
fn survey_human_table_uses_truth_marks() {
    let out = splitconf(&["survey", "--n-min", "7", "--n-max", "7"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "n  S        splittable  girth  diameter  arc-transitive\n\
         7  {0,1,2}  \u{22a5}               4         4  \u{22a5}\n\
         7  {0,1,3}  \u{22a5}               6         3  \u{22a4}\n"
    );
}

#[test]
fn survey_girth6_filter() {
    let out = splitconf(&[
        "survey",
        "--n-min",
        "7",
        "--n-max",
        "8",
        "--tsv",
        "--girth6-only",
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "n\tS\tsplittable\tgirth\tdiameter\tarc-transitive\n\
         7\t{0,1,3}\t0\t6\t3\t1\n\
         8\t{0,1,3}\t0\t6\t4\t1\n"
    );
}

#[test]
fn worker_count_never_changes_bytes() {
    let one = splitconf(&[
        "survey", "--n-min", "3", "--n-max", "12", "--tsv", "--jobs", "1",
    ]);
    let four = splitconf(&[
        "survey", "--n-min", "3", "--n-max", "12", "--tsv", "--jobs", "4",
    ]);
    assert!(one.status.success() && four.status.success());
    assert_eq!(stdout(&one), stdout(&four));
}

#[test]
fn oracle_flag_passes_on_small_range() {
    let out = splitconf(&[
        "census", "--n-min", "3", "--n-max", "10", "--tsv", "--oracle",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
}

#[test]
fn analyze_heawood_report() {
    let out = splitconf(&["analyze", "H(7;0,1,3)"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("girth: 6"));
    assert!(text.contains("diameter: 3"));
    assert!(text.contains("splittable: no"));
    assert!(text.contains("arc-transitive: yes"));
}

#[test]
fn analyze_gp12_5_reports_certificate() {
    let out = splitconf(&["analyze", "GP(12,5)"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("splittable: yes"));
    assert!(text.contains("splitting set: "));
}

#[test]
fn analyze_gp5_2_excluded_from_configuration_analysis() {
    let out = splitconf(&["analyze", "GP(5,2)"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("girth: 5"));
    assert!(text.contains("configuration analysis: skipped"));
}

#[test]
fn analyze_parse_error_exits_2_with_column() {
    let out = splitconf(&["analyze", "H(7;0,1,x)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("column 9"), "{}", stderr(&out));
}

#[test]
fn analyze_dot_output() {
    let out = splitconf(&["analyze", "--dot", "H(3;0,1,2)"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("graph g {"));
    assert!(text.contains("0 [label=\"0+\"];"));
    assert!(text.contains("3 [label=\"0-\"];"));
}

#[test]
fn usage_errors_exit_2() {
    let out = splitconf(&["census", "--n-min", "99", "--n-max", "5"]);
    assert_eq!(out.status.code(), Some(2));
    let out = splitconf(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_theorems_passes_and_fault_injection_fails() {
    let out = splitconf(&["verify-theorems", "--n-max", "14"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    for name in [
        "hexagon-splitting-sets",
        "explicit-families",
        "f1-prefix",
        "f2-prefix",
        "certificate-graphs",
        "grid-expansion",
    ] {
        assert!(text.contains(&format!("PASS {name}")), "{text}");
    }
    assert!(text.contains("6 checks, 0 failed"));

    let out = splitconf(&["verify-theorems", "--n-max", "14", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL certificate-graphs"));
}

#[test]
fn scan_families_emits_tsv_and_passes() {
    let out = splitconf(&["scan-families", "--n-max", "12"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("n\tsymbol\tgirth\tverdict\tfamily_tag\tcertificate\n"));
    assert!(text.contains("7\t{0,1,3}\t6\tunsplittable\tF1\t-"));
}

#[test]
fn scan_arity_guards_arity() {
    let out = splitconf(&["scan-arity", "--arity", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = splitconf(&["scan-arity", "--arity", "4", "--n-min", "4", "--n-max", "8"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn analyze_edge_list_file() {
    let dir = std::env::temp_dir().join("splitconf-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c7.txt");
    std::fs::write(&path, "0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 0\n").unwrap();
    let out = splitconf(&["analyze", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("vertices: 7"));
    assert!(text.contains("girth: 7"));
    assert!(text.contains("splittable: yes"));

    let out = splitconf(&["analyze", dir.join("absent.txt").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}
