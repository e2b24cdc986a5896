use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_blockgap")).args(args).output().expect("binary runs")
}

fn ok_json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn ok_csv(args: &[&str]) -> Vec<Vec<String>> {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().lines().map(|l| l.split(',').map(str::to_owned).collect()).collect()
}

fn float(s: &str) -> f64 {
    s.parse().unwrap()
}

#[test]
fn hbinv_on_pure_coupling() {
    let v = ok_json(&["bounds", &data("pure_coupling.txt"), "--method", "hbinv"]);
    assert_eq!(v["verdict"], "SOUND");
    assert!((v["inv_norm_bound"].as_f64().unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn all_methods_on_kirsch_example() {
    let v = ok_json(&["bounds", &data("kirsch.txt")]);
    let certs = v["certificates"].as_array().unwrap();
    let diag = certs.iter().find(|c| c["method"] == "diag_gap").expect("diag certificate");
    assert_eq!(diag["interval"], serde_json::json!([-1.0, 1.0]));
    assert!(certs.iter().all(|c| c["verdict"] == "SOUND"));
    assert_eq!(v["eigenvalues"].as_array().unwrap().len(), 4);
}

#[test]
fn malformed_input_exits_with_two() {
    let out = run(&["bounds", &data("malformed.txt")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 4"));
    assert_eq!(run(&["bounds", &data("missing.txt")]).status.code(), Some(2));
    assert_eq!(run(&["model", "secular", "-m", "2", "-c", "x"]).status.code(), Some(2));
    assert_eq!(run(&["bounds", &data("kirsch.txt"), "--tol-psd", "-1"]).status.code(), Some(2));
}

#[test]
fn failed_hypotheses_exit_with_three() {
    let out = run(&["bounds", &data("kirsch.txt"), "--method", "hbinv"]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["stokes", &data("stokes_nab_violated.txt")]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("N(A)"));
    assert_eq!(run(&["stokes", &data("kirsch.txt")]).status.code(), Some(3));
    assert_eq!(run(&["model", "spurious", "-m", "50", "-c", "1"]).status.code(), Some(3));
    assert_eq!(run(&["model", "secular", "-m", "1", "-c", "1"]).status.code(), Some(3));
}

#[test]
fn stokes_scalar_golden_ratio() {
    let golden = (1.0 + 5f64.sqrt()) / 2.0;
    let v = ok_json(&["stokes", &data("stokes_scalar.txt")]);
    let minimal = &v["intervals"][0];
    assert_eq!(minimal["source"], "minimal");
    assert!((minimal["i_plus"][1].as_f64().unwrap() - golden).abs() < 1e-14);
    assert!((minimal["i_minus"][0].as_f64().unwrap() - (1.0 - golden)).abs() < 1e-14);

    let rows = ok_csv(&["stokes", &data("stokes_scalar.txt"), "--format", "csv"]);
    assert_eq!(rows[0], ["index", "branch", "value"]);
    assert_eq!(rows.len(), 3);
}

#[test]
fn secular_unit_coupling() {
    let rows = ok_csv(&["model", "secular", "-m", "2", "-c", "1"]);
    let lambda: Vec<f64> = rows[1..].iter().map(|r| float(&r[2])).collect();
    assert!((lambda[0] - 0.381_966).abs() < 1e-6 && (lambda[1] - 2.618_034).abs() < 1e-6);
}

#[test]
fn spurious_log_scale() {
    let v = ok_json(&["model", "spurious", "-m", "50", "-c", "0.5"]);
    let est = v["log10_lambda"]["estimate"].as_f64().unwrap();
    assert!((est - (2f64.log10() - 50.0 * 4f64.log10())).abs() < 1e-10);
    let secular = v["log10_lambda"]["secular"].as_f64().unwrap();
    let hra = v["log10_lambda"]["hra"].as_f64().unwrap();
    assert!((secular - hra).abs() < 1e-8 * hra.abs());
}

#[test]
fn scan_row_count() {
    let rows = ok_csv(&["model", "scan", "--M", "0.1,1,1.5,1.8,2.5,3", "--delta", "0.5", "-m", "100", "--seed", "7"]);
    assert_eq!(rows.len(), 1 + 6 * 2 * 200);
}

#[test]
fn verify_passes() {
    let rows = ok_csv(&["model", "verify", "-m", "10,25"]);
    assert!(rows[1..].iter().all(|r| r.last().unwrap() == "PASS"));
}

#[test]
fn counterexample_report() {
    let out = run(&["counterexamples"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let bottcher = text.lines().skip_while(|l| *l != "# bottcher").nth(2).unwrap();
    let cells: Vec<&str> = bottcher.split(',').collect();
    assert!((float(cells[0]) - 21.177).abs() < 1e-3 && (float(cells[1]) - 43.774).abs() < 1e-3);
    assert_eq!(cells[3], "true");
    let omladic = text.lines().find(|l| l.starts_with("1.0000000000000000e2,")).unwrap();
    assert!(float(omladic.split(',').nth(1).unwrap()) >= 100.0 / 3.0);
    let kirsch: Vec<f64> =
        text.lines().filter(|l| l.starts_with("kirsch_Bt,")).map(|l| float(l.split(',').nth(1).unwrap())).collect();
    assert!(kirsch.first() == Some(&5.0) && kirsch.last() == Some(&20.0));
}

#[test]
fn format_selection() {
    let v = ok_json(&["counterexamples", "--format", "json", "--t-range", "5:20:3"]);
    assert_eq!(v["curves"].as_array().unwrap().len(), 9);
    assert_eq!(run(&["model", "spurious", "-m", "50", "-c", "0.5", "--format", "csv"]).status.code(), Some(2));
}

#[test]
fn output_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let args = ["model", "disorder", "-m", "30", "--seed", "5"];
    let stdout = run(&args).stdout;
    let mut with_file = args.to_vec();
    with_file.extend(["--output", path.to_str().unwrap()]);
    let out = run(&with_file);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), stdout);
}

#[test]
fn repeated_runs_are_identical() {
    let args = ["model", "scan", "--M", "0.1,3", "--delta", "0.5", "-m", "40", "--seed", "3"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let other = ["model", "scan", "--M", "0.1,3", "--delta", "0.5", "-m", "40", "--seed", "4"];
    assert_ne!(run(&args).stdout, run(&other).stdout);
}
