use std::process::Command;

use incgamma::coefficients::{a_coeffs_exact, b_poly_recurrence};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_incgamma")).args(args).output().expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn table(stdout: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut r = csv::Reader::from_reader(stdout.as_bytes());
    let header = r.headers().unwrap().iter().map(String::from).collect();
    let rows = r.records().map(|x| x.unwrap().iter().map(String::from).collect()).collect();
    (header, rows)
}

fn column<'a>(header: &[String], row: &'a [String], name: &str) -> &'a str {
    let i = header.iter().position(|h| h == name).unwrap_or_else(|| panic!("no column {name}"));
    &row[i]
}

fn num(s: &str) -> f64 {
    s.parse().unwrap_or_else(|_| panic!("not a number: {s:?}"))
}

fn big(v: &Value) -> BigInt {
    v.as_str().unwrap().parse().unwrap()
}

#[test]
fn a_coefficients_round_trip_through_json() {
    let r = run(&["coeffs", "--kind", "a", "--n-max", "40", "--format", "json"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let doc: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(doc["precision_bits"], 256);
    let records = doc["records"].as_array().unwrap();
    let exact = a_coeffs_exact(40);
    assert_eq!(records.len(), exact.len());
    for (rec, c) in records.iter().zip(&exact) {
        let e = &rec["exact"];
        let q = BigRational::new(big(&e["num"]), big(&e["den"]));
        assert_eq!(q, c.rational);
        assert_eq!(e["s"].as_u64().unwrap(), c.s as u64);
        assert!(rec["lambda"].is_null());
    }
}

#[test]
fn b_polynomials_round_trip_through_json() {
    let r = run(&["coeffs", "--kind", "b", "--n-max", "12", "--lambda", "5/2", "--format", "json"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let doc: Value = serde_json::from_str(&r.stdout).unwrap();
    let polys = b_poly_recurrence(12);
    for (rec, p) in doc["records"].as_array().unwrap().iter().zip(&polys) {
        let got: Vec<BigInt> = rec["exact"]["poly"].as_array().unwrap().iter().map(big).collect();
        assert_eq!(got.as_slice(), p.coefficients());
        assert_eq!(rec["lambda"], "5/2");
    }
    // b_2(λ) = λ + 2λ²
    let b2 = &doc["records"][2]["value"];
    assert!((num(b2.as_str().unwrap()) - 15.0).abs() < 1e-12);
}

#[test]
fn eval_series_with_bound() {
    let r = run(&["eval", "--a", "30", "--lambda", "2", "--N", "9", "--method", "series+bound", "--check"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let (h, rows) = table(&r.stdout);
    let row = &rows[0];
    assert!(["CSC", "MEIJER"].contains(&column(&h, row, "regime")));
    assert!(num(column(&h, row, "abs_diff")) <= num(column(&h, row, "bound")));
    assert!((num(column(&h, row, "value_re")) - num(column(&h, row, "oracle_re"))).abs() < 1e-5);
}

#[test]
fn eval_z_partial_sum() {
    let r = run(&["eval", "--z", "30", "--N", "4", "--method", "series"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let (h, rows) = table(&r.stdout);
    let c = (2.0 / std::f64::consts::PI).sqrt();
    let z: f64 = 30.0;
    let expected = 1.0 - c / 3.0 / z.sqrt() + 1.0 / 12.0 / z - 4.0 / 135.0 * c / z.powf(1.5);
    assert!((num(column(&h, &rows[0], "value_re")) - expected).abs() < 1e-14);
    assert_eq!(num(column(&h, &rows[0], "value_im")), 0.0);
    assert_eq!(column(&h, &rows[0], "bound"), "");
}

#[test]
fn eval_hyper_layer() {
    let r = run(&["eval", "--a", "30", "--lambda", "2", "--N", "9", "--K", "3", "--method", "hyper", "--check"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let (h, rows) = table(&r.stdout);
    let row = &rows[0];
    assert_eq!(column(&h, row, "regime"), "HYPER_BOUND");
    assert_eq!(column(&h, row, "certified"), "true");
    let bound = num(column(&h, row, "bound"));
    assert!(num(column(&h, row, "abs_diff")) <= bound && bound < 1e-10);
}

#[test]
fn eval_reports_the_certified_sector() {
    let r = run(&["eval", "--z", "10", "--N", "4", "--arg", "1.6", "--method", "series+bound"]);
    assert_eq!(r.code, 2);
    assert!(r.stdout.is_empty());
    assert!(r.stderr.contains("3π/2"), "{}", r.stderr);
    let r = run(&["eval", "--a", "30", "--N", "9", "--method", "hyper"]);
    assert_eq!(r.code, 2, "{}", r.stderr);
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["eval", "--a", "3", "--z", "3", "--N", "2"][..],
        &["eval", "--a", "abc", "--lambda", "2", "--N", "2"],
        &["eval", "--a", "30", "--lambda", "0.5", "--N", "2"],
        &["--precision-bits", "32", "eval", "--z", "3", "--N", "2"],
        &["verify-tables", "--table", "4"],
    ] {
        let r = run(args);
        assert_eq!(r.code, 2, "{args:?}: {}", r.stderr);
        assert!(r.stdout.is_empty());
    }
}

#[test]
fn malformed_scan_grid_yields_no_output() {
    for grid in [["1.2", "0.8", "0.01"], ["0.8", "1.2", "0"], ["0.3", "0.8", "0.1"]] {
        let r = run(&[
            "stokes-scan", "--kind", "a", "--abs", "30", "--lambda", "2", "--from", grid[0], "--to", grid[1], "--step",
            grid[2],
        ]);
        assert_eq!(r.code, 2, "{grid:?}");
        assert!(r.stdout.is_empty());
    }
}

#[test]
fn z_scan_crosses_one_half_on_the_stokes_line() {
    let r = run(&[
        "--precision-bits", "128", "stokes-scan", "--kind", "z", "--abs", "8", "--from", "1.4", "--to", "1.6", "--step",
        "0.1",
    ]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let (h, rows) = table(&r.stdout);
    assert_eq!(h, ["theta", "exact_re", "exact_im", "terminant_re", "terminant_im", "erf_re", "erf_im", "thm_bound", "certified"]);
    let theta: Vec<&str> = rows.iter().map(|r| column(&h, r, "theta")).collect();
    assert_eq!(theta, ["1.4", "1.5", "1.6"]);
    let erf: Vec<f64> = rows.iter().map(|r| num(column(&h, r, "erf_re"))).collect();
    assert!(erf[0] < 0.5 && (erf[1] - 0.5).abs() < 1e-30 && erf[2] > 0.5);
    for r in &rows {
        let d = num(column(&h, r, "terminant_re")) - num(column(&h, r, "erf_re"));
        assert!(d.abs() < 1.5 / (2.0 * std::f64::consts::PI * 8.0).sqrt());
    }
}

#[test]
fn output_is_deterministic_and_metadata_is_opt_in() {
    let args = ["coeffs", "--kind", "a", "--n-max", "10"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    assert!(a.stderr.is_empty());
    let mut with_meta = args.to_vec();
    with_meta.push("--meta");
    let m = run(&with_meta);
    assert_eq!(m.stdout, a.stdout);
    let meta: Value = serde_json::from_str(&m.stderr).unwrap();
    assert_eq!(meta["precision_bits"], 256);

    let json = run(&["coeffs", "--kind", "a", "--n-max", "3", "--format", "json", "--meta"]);
    let doc: Value = serde_json::from_str(&json.stdout).unwrap();
    assert!(doc["meta"]["version"].is_string());
}

#[test]
fn out_path_writes_data_and_sidecar() {
    let dir = std::env::temp_dir().join(format!("incgamma-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a.csv");
    let p = path.to_str().unwrap();
    let r = run(&["coeffs", "--kind", "a", "--n-max", "5", "--out", p, "--meta"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.is_empty());
    let data = std::fs::read_to_string(&path).unwrap();
    assert!(data.starts_with("n,lambda,value,num,den,s,poly\n"));
    assert_eq!(data.lines().count(), 7);
    assert!(dir.join("a.csv.meta.json").exists());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn bounds_hold_on_a_small_grid() {
    let r = run(&["bounds", "--kind", "z", "--abs", "10", "--arg", "0,0.5,-1.2", "--N", "2,5"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let (h, rows) = table(&r.stdout);
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().all(|r| column(&h, r, "holds") == "true"));
    assert_eq!(run(&["bounds", "--kind", "a", "--abs", "10", "--lambda", "2", "--arg", "1", "--N", "2"]).code, 2);
}

#[test]
fn late_b_row_layout() {
    let r = run(&["--precision-bits", "512", "late", "--kind", "b", "--n", "100", "--lambda", "8"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let (_, rows) = table(&r.stdout);
    assert_eq!(rows[0][..2], ["K", "55"]);
    assert!(rows[1][1].starts_with("7.688481106808590674525145642326792894187"));
    assert_eq!(rows[2][0], "INV_FACTORIAL");
    assert!(rows[2][2].starts_with("8.16") && rows[2][2].ends_with("e219"));
    assert_eq!(run(&["late", "--kind", "a", "--index", "200"]).code, 2);
}

#[test]
fn verify_tables_passes() {
    let r = run(&["verify-tables"]);
    assert_eq!(r.code, 0, "{}\n{}", r.stdout, r.stderr);
    let (h, rows) = table(&r.stdout);
    assert_eq!(rows.len(), 33);
    assert!(rows.iter().all(|r| column(&h, r, "status").starts_with("ok")));
    let r = run(&["--precision-bits", "128", "verify-tables"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("precision"));
}
