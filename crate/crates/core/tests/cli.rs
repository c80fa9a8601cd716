use std::path::Path;
use std::process::Command;

use regcut::cli::{run, EXIT_FAIL, EXIT_OK, EXIT_USAGE};

fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut argv = vec!["regcut"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn build_prints_graph6() {
    assert_eq!(call(&["build", "--d", "3", "--c", "1"], ""), (EXIT_OK, "I}KGGGB?w\n".into(), String::new()));
    let (code, out, _) = call(&["build", "--d", "9", "--c", "7", "--cycles", "3,4"], "");
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "U]~vf~}~v|@~?@?@??W?F??{?Bw?Fw?F{?B~??~w\n");
}

#[test]
fn build_rejects_bad_parameters() {
    let (code, out, err) = call(&["build", "--d", "4", "--c", "3"], "");
    assert_eq!(code, EXIT_USAGE);
    assert!(out.is_empty());
    assert!(err.contains("c must be even for even d"), "{err}");
    assert_eq!(call(&["build", "--d", "5", "--c", "5"], "").0, EXIT_USAGE);
    assert_eq!(call(&["build", "--d", "9", "--c", "7", "--cycles", "3,3"], "").0, EXIT_USAGE);
    assert_eq!(call(&["build", "--d", "x"], "").0, EXIT_USAGE);
    assert_eq!(call(&["frobnicate"], "").0, EXIT_USAGE);
}

#[test]
fn spectrum_reads_stdin_lines() {
    let (code, out, _) = call(&["spectrum"], "I}KGGGB?w\n\nEFz_\n");
    assert_eq!(code, EXIT_OK);
    let lines: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["lambda2"], 2.778457118);
    assert_eq!(lines[0]["n"], 10);
    assert_eq!(lines[1]["eigenvalues"], serde_json::json!([3.0, 0.0, 0.0, 0.0, 0.0, -3.0]));
    assert_eq!(call(&["spectrum"], "not graph6 ~~~\n").0, EXIT_USAGE);
}

#[test]
fn threshold_table() {
    let (code, out, _) = call(&["threshold", "--d-range", "3..5"], "");
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        out,
        "d\tc_star\tthreshold\tcoefficients\n\
         3\t1\t2.778457118\t1 0 -7 -2\n\
         4\t2\t3.645751311\t1 0 -12 -8 12\n\
         5\t2\t4.664325409\t1 0 -19 -18 24\n"
    );
    let (_, verbose, _) = call(&["threshold", "--d", "4", "--verbose"], "");
    assert!(verbose.ends_with("\tc=2\t3.645751311\n"), "{verbose}");
    let (code, out, _) = call(&["threshold", "--d-range", "2..4"], "");
    assert_eq!(code, EXIT_USAGE);
    assert!(out.is_empty());
}

#[test]
fn compare_bounds_table() {
    let (code, out, _) = call(&["compare-bounds", "--d", "4", "--n", "11"], "");
    assert_eq!(code, EXIT_OK);
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(rows[0], "bound\tvalue\tmargin");
    assert_eq!(rows.len(), 6);
    assert_eq!(rows[5], "new\t3.645751311\t0.000000000");
    assert_eq!(call(&["compare-bounds", "--d", "4", "--n", "5"], "").0, EXIT_USAGE);
}

#[test]
fn verify_summary_and_exit_code() {
    let (code, out, _) = call(&["verify", "--d", "3", "--n-max", "10"], "");
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["graphs"], 27);
    assert_eq!(v["cut_vertex_graphs"], 1);
    assert_eq!(v["equality_cases"], serde_json::json!(["IsP@`cKBG"]));
    assert_ne!(EXIT_OK, EXIT_FAIL);
    assert_eq!(call(&["verify", "--d", "3", "--n-max", "10", "--mode", "random", "--samples", "4"], "").0, EXIT_USAGE);
    assert_eq!(call(&["verify", "--d", "2", "--n-max", "10"], "").0, EXIT_USAGE);
}

fn run_binary(dir: &Path, threads: &str, mode: &[&str]) -> (Vec<u8>, Vec<u8>) {
    let csv = dir.join(format!("{threads}.csv"));
    let json = dir.join(format!("{threads}.json"));
    let status = Command::new(env!("CARGO_BIN_EXE_regcut"))
        .args(["verify", "--threads", threads, "--csv"])
        .arg(&csv)
        .arg("--json")
        .arg(&json)
        .args(mode)
        .output()
        .unwrap();
    assert!(status.status.success(), "{}", String::from_utf8_lossy(&status.stderr));
    assert_eq!(status.stdout, std::fs::read(&json).unwrap());
    (std::fs::read(csv).unwrap(), std::fs::read(json).unwrap())
}

#[test]
fn output_is_independent_of_thread_count() {
    for mode in [
        &["--d", "3", "--n-max", "12"][..],
        &["--d", "5", "--n-max", "14", "--mode", "random", "--samples", "40", "--seed", "11"][..],
    ] {
        let dir = tempfile::tempdir().unwrap();
        let one = run_binary(dir.path(), "1", mode);
        for t in ["2", "4"] {
            assert_eq!(run_binary(dir.path(), t, mode), one, "threads={t} {mode:?}");
        }
        let csv = String::from_utf8(one.0).unwrap();
        assert!(csv.starts_with(&format!("{}\n", regcut::verify::CSV_HEADER)));
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_regcut");
    let ok = Command::new(bin).args(["build", "--d", "3", "--c", "1"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert_eq!(ok.stdout, b"I}KGGGB?w\n");
    let bad = Command::new(bin).args(["build", "--d", "4", "--c", "3"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
}
