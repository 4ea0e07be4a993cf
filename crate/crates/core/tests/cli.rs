use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin(args: &[&str], cwd: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lrdforecast")).args(args).current_dir(cwd).output().unwrap()
}

fn json_file(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

fn error_code(out: &Output) -> String {
    let line = String::from_utf8_lossy(&out.stderr).lines().last().unwrap_or_default().to_string();
    let v: Value = serde_json::from_str(&line).unwrap_or_else(|_| panic!("stderr is not a JSON line: {line}"));
    v["error"]["code"].as_str().unwrap().to_string()
}

#[test]
fn simulate_then_analyze_reports_long_memory() {
    let dir = tempfile::tempdir().unwrap();
    let sim = bin(&["simulate", "--kind", "arfima", "--d", "0.3", "--n", "4096", "--seed", "1", "--out", "s.csv"], dir.path());
    assert!(sim.status.success(), "{}", String::from_utf8_lossy(&sim.stderr));
    let csv = fs::read_to_string(dir.path().join("s.csv")).unwrap();
    assert!(csv.starts_with("timestamp,value\n"));
    assert_eq!(csv.lines().count(), 4097);

    let out = bin(&["analyze", "s.csv", "--out", "a.json"], dir.path());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let doc = json_file(&dir.path().join("a.json"));
    assert_eq!(doc["verdict"], "LRD");
    assert_eq!(doc["n"], 4096);

    let manifest = json_file(&dir.path().join("a.json.manifest.json"));
    assert_eq!(manifest["subcommand"], "analyze");
    let digest = manifest["inputs"][0]["sha256"].as_str().unwrap();
    assert_eq!(digest.len(), 64);
    assert!(digest.chars().all(|c| c.is_ascii_hexdigit()));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    assert!(bin(&["simulate", "--kind", "fgn", "--hurst", "0.75", "--n", "300", "--seed", "5", "--out", "x.csv"], dir.path()).status.success());
    for name in ["f1.csv", "f2.csv"] {
        let out = bin(&["forecast", "x.csv", "--family", "ARIMA", "--horizon", "12", "--out", name], dir.path());
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    }
    let a = fs::read(dir.path().join("f1.csv")).unwrap();
    assert_eq!(a, fs::read(dir.path().join("f2.csv")).unwrap());
    let text = String::from_utf8(a).unwrap();
    assert!(text.starts_with("horizon,point,lower,upper\n"));
    assert_eq!(text.lines().count(), 13);
}

#[test]
fn fit_document_drives_forecast() {
    let dir = tempfile::tempdir().unwrap();
    assert!(bin(&["simulate", "--kind", "arfima", "--d", "0.2", "--n", "400", "--seed", "3", "--out", "x.csv"], dir.path()).status.success());
    let fit = bin(&["fit", "x.csv", "--family", "ARFIMA", "--out", "m.json"], dir.path());
    assert!(fit.status.success(), "{}", String::from_utf8_lossy(&fit.stderr));
    let model = json_file(&dir.path().join("m.json"));
    for key in ["family", "p", "d", "q", "phi", "theta", "mean", "sigma2", "aicc", "transform"] {
        assert!(model.get(key).is_some(), "model document lacks {key}");
    }
    assert_eq!(model["family"], "ARFIMA");

    let from_doc = bin(&["forecast", "x.csv", "--model", "m.json", "--horizon", "5", "--format", "json"], dir.path());
    assert!(from_doc.status.success(), "{}", String::from_utf8_lossy(&from_doc.stderr));
    let refit = bin(&["forecast", "x.csv", "--family", "ARFIMA", "--horizon", "5", "--format", "json"], dir.path());
    let a: Value = serde_json::from_slice(&from_doc.stdout).unwrap();
    let b: Value = serde_json::from_slice(&refit.stdout).unwrap();
    // the document carries coefficients at 9 significant digits
    let (pa, pb) = (a["point"].as_array().unwrap(), b["point"].as_array().unwrap());
    assert_eq!(pa.len(), 5);
    for (x, y) in pa.iter().zip(pb) {
        let (x, y) = (x.as_f64().unwrap(), y.as_f64().unwrap());
        assert!((x - y).abs() <= 1e-7 * y.abs(), "{x} vs {y}");
    }
}

#[test]
fn crossval_over_a_directory() {
    let dir = tempfile::tempdir().unwrap();
    let data = dir.path().join("series");
    fs::create_dir(&data).unwrap();
    for i in 0..10 {
        let name = format!("series/svc{i}.csv");
        let seed = (100 + i).to_string();
        let out = bin(&["simulate", "--kind", "arfima", "--d", "0.3", "--n", "150", "--seed", &seed, "--out", &name], dir.path());
        assert!(out.status.success());
    }
    // simulate drops its manifest next to each CSV; keep only the series
    for e in fs::read_dir(&data).unwrap() {
        let p = e.unwrap().path();
        if p.to_string_lossy().ends_with(".manifest.json") {
            fs::remove_file(p).unwrap();
        }
    }
    let out = bin(&["crossval", "--window", "96", "--horizon", "48", "--out-dir", "cv", "series"], dir.path());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    let cv = dir.path().join("cv");
    let report = json_file(&cv.join("report.json"));
    assert_eq!(report["series"].as_array().unwrap().len(), 10);
    assert_eq!(report["analyses"].as_array().unwrap().len(), 10);
    let matrix = report["improvement_matrix"]["mean"].as_array().unwrap();
    assert_eq!(matrix.len(), 4);
    assert!(matrix.iter().all(|row| row.as_array().unwrap().len() == 4));
    assert_eq!(report["experiment_count"], 4 * 10 * 7 * 48);

    let header = |f: &str| fs::read_to_string(cv.join(f)).unwrap().lines().next().unwrap().to_string();
    assert_eq!(header("metrics.csv"), "method,horizon,mae,mape,count");
    assert_eq!(header("improvements.csv"), "pair,horizon,improvement_pct");
    assert_eq!(header("boxplot.csv"), "method,horizon,min,q1,median,q3,max");
    let manifest = json_file(&cv.join("run-manifest.json"));
    assert_eq!(manifest["inputs"].as_array().unwrap().len(), 10);
}

#[test]
fn unknown_flag_is_a_validation_error_and_writes_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin(&["simulate", "--kind", "arfima", "--d", "0.3", "--n", "100", "--bogus", "--out", "s.csv"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    error_code(&out);
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 0);
}

#[test]
fn missing_input_and_runtime_failures_use_distinct_codes() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin(&["analyze", "nope.csv"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    error_code(&out);

    assert!(bin(&["simulate", "--kind", "white_noise", "--n", "20", "--seed", "1", "--out", "short.csv"], dir.path()).status.success());
    let out = bin(&["fit", "short.csv", "--family", "ARFIMA"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(error_code(&out).contains("too_short"), "{}", error_code(&out));
}

#[test]
fn help_and_version_exit_zero() {
    let dir = tempfile::tempdir().unwrap();
    let help = bin(&["--help"], dir.path());
    assert_eq!(help.status.code(), Some(0));
    let text = String::from_utf8_lossy(&help.stdout);
    for sub in ["analyze", "fit", "forecast", "crossval", "simulate"] {
        assert!(text.contains(sub), "help lacks {sub}");
    }
    assert_eq!(bin(&["--version"], dir.path()).status.code(), Some(0));
}
