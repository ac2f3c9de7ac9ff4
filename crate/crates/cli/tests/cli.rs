//! Black-box tests of the `trihom` binary: exit codes, output stability,
//! and the file-driven input paths.

use std::path::PathBuf;
use std::process::{Command, Output};

fn trihom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trihom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).expect("utf-8 stderr")
}

fn tmp_file(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).expect("write temp file");
    path
}

#[test]
fn sol3_table_is_byte_stable() {
    let want = "sol3 over Z\n\
                H_0   Z\n\
                H_1   Z^3\n\
                H_2   Z^3\n\
                H_3   Z + Z2\n\
                H_4   Z2^2\n\
                H_5   Z2\n\
                H_6   0\n";
    let a = trihom(&["homology", "--family", "sol", "--n", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), want);
    let b = trihom(&["homology", "--family", "sol", "--n", "3"]);
    assert_eq!(a.stdout, b.stdout, "repeated runs must agree byte for byte");
}

#[test]
fn degree_window_csv() {
    let o = trihom(&[
        "homology", "--family", "sol", "--n", "3", "--deg", "3..4", "--format", "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "n,k,free,torsion\nsol3 over Z,3,1,2^1\nsol3 over Z,4,0,2^2\n"
    );
}

#[test]
fn json_output_parses() {
    let o = trihom(&["homology", "--family", "sol", "--n", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).expect("valid json");
    assert_eq!(v["name"], "sol2 over Z");
    assert_eq!(v["ring"], "Z");
    let groups = v["groups"].as_array().unwrap();
    assert_eq!(groups.len(), 4);
    assert_eq!(groups[1]["free"], 2);
    assert_eq!(groups[1]["torsion"].as_array().unwrap().len(), 0);
}

#[test]
fn field_coefficients_report_dimensions() {
    let o = trihom(&["homology", "--family", "sol", "--n", "3", "--ring", "Z/2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("sol3 over Z/2\n"));
    assert!(out.contains("H_3   dim 2"), "got:\n{out}");
}

#[test]
fn emit_matching_lists_pairs() {
    let o = trihom(&[
        "homology", "--family", "sol", "--n", "2", "--emit-matching", "--deg", "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    // Pairs come first: `degree upper lower` with wedges as bitmasks.
    assert_eq!(lines[0], "2 3 2");
    assert_eq!(lines[1], "3 7 6");
    assert_eq!(lines[2], "sol2 over Z");
    assert_eq!(lines[3], "H_1   Z^2");
}

#[test]
fn stats_on_diagonal_family() {
    let o = trihom(&["stats", "--family", "dgn", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let want = "dgn3 over Z\n\
                deg        original     critical\n\
                0                 1            1\n\
                1                 3            3\n\
                2                 3            3\n\
                3                 1            1\n\
                total             8            8\n\
                ratio  1.000000\n";
    assert_eq!(stdout(&o), want);
}

#[test]
fn stats_ratio_shrinks_for_triangular() {
    let o = trihom(&["stats", "--family", "sol", "--n", "4", "--ring", "Z/2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("ratio  0.125000"), "got:\n{}", stdout(&o));
}

#[test]
fn simplicial_facets_file() {
    let path = tmp_file("hollow-triangle.txt", "a b\nb c\nc a  # three edges\n");
    let o = trihom(&[
        "homology", "--family", "simplicial", "--facets", path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "simplicial over Z\nH_0   Z\nH_1   Z\n");
}

#[test]
fn poset_file_drives_gl_poset() {
    let path = tmp_file(
        "diamond.poset",
        "n = 4\n1 < 2\n1 < 3\n2 < 4\n3 < 4\n",
    );
    let o = trihom(&[
        "homology", "--family", "gl-poset", "--poset", path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("H_1   Z^4"), "got:\n{out}");
}

#[test]
fn cup_table_runs() {
    let o = trihom(&["cup-table", "--family", "sol", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("exterior algebra on x1, x2"), "got:\n{out}");
    assert!(out.contains("x1 * x2 = x1*x2 [ok]"), "got:\n{out}");
}

#[test]
fn verify_suites_exit_zero() {
    for suite in ["tensor", "conjecture-probe"] {
        let o = trihom(&["verify", suite]);
        assert_eq!(o.status.code(), Some(0), "suite {suite}");
        assert!(stdout(&o).contains("0 failed"), "suite {suite}");
    }
}

#[test]
fn conjecture_probe_reports_location() {
    let o = trihom(&["verify", "conjecture-probe", "--m", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(
        stdout(&o).contains("column n = 5, row k = 7; matches the conjectured (m + 1, 2m - 1)"),
        "got:\n{}",
        stdout(&o)
    );
}

#[test]
fn bad_job_specifications_exit_two() {
    let cases: &[&[&str]] = &[
        &["homology", "--family", "sol"],                          // missing --n
        &["homology", "--family", "sol", "--n", "3", "--ring", "W"],
        &["homology", "--family", "sol", "--n", "3", "--ring", "Z/1"],
        &["homology", "--family", "so2", "--n", "3"],              // needs char 2
        &["homology", "--family", "gl-poset", "--n", "3"],         // needs --poset
        &["homology", "--family", "simplicial"],                   // needs --facets
        &["verify", "nosuchsuite"],
        &["homology", "--family", "sol", "--n", "3", "--deg", "5..2"],
    ];
    for args in cases {
        let o = trihom(args);
        assert_eq!(o.status.code(), Some(2), "args {args:?}");
        assert!(!stderr(&o).is_empty(), "diagnostic expected for {args:?}");
    }
}

#[test]
fn oversized_complex_exits_three() {
    let o = trihom(&["homology", "--family", "sol", "--n", "7"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(!stderr(&o).is_empty());
}

#[test]
fn clap_errors_exit_two() {
    let o = trihom(&["homology", "--family", "frobnicate", "--n", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn threads_flag_does_not_change_output() {
    let a = trihom(&["stats", "--family", "sol", "--n", "4", "--threads", "1"]);
    let b = trihom(&["stats", "--family", "sol", "--n", "4", "--threads", "4"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
