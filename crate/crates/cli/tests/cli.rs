use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use pcd_core::sampling::{replicate_rng, sample_hull};
use pcd_core::{Alternative, DelaunayMesh, Point};
use rand::Rng;
use serde_json::Value;
use tempfile::TempDir;

fn pcd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pcd")).args(args).output().expect("spawn pcd")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn write_csv(dir: &Path, name: &str, pts: &[Point], header: bool) -> PathBuf {
    let mut s = String::new();
    if header {
        s.push_str("x,y\n");
    }
    for p in pts {
        writeln!(s, "{},{}", p.x, p.y).unwrap();
    }
    let path = dir.join(name);
    std::fs::write(&path, s).unwrap();
    path
}

fn p(x: f64, y: f64) -> Point {
    Point::new(x, y)
}

fn sites_13() -> Vec<Point> {
    let mut rng = replicate_rng(13, 0);
    let mut s = vec![p(0.0, 0.0), p(1.0, 0.0), p(1.0, 1.0), p(0.0, 1.0)];
    s.extend((0..9).map(|_| p(rng.random(), rng.random())));
    s
}

#[test]
fn three_sites_use_the_single_triangle_test() {
    let dir = TempDir::new().unwrap();
    let y = write_csv(dir.path(), "y.csv", &[p(0.0, 0.0), p(1.0, 0.0), p(0.5, 0.8)], true);
    let x = write_csv(dir.path(), "x.csv", &[p(0.5, 0.2), p(0.4, 0.3), p(0.6, 0.1), p(0.5, 0.5)], false);
    let v = json(&pcd(&["test", "-x", x.to_str().unwrap(), "-y", y.to_str().unwrap(), "-r", "1.5,2,inf"]));
    assert_eq!(v["command"], "test");
    assert_eq!(v["version"], pcd_core::VERSION);
    assert_eq!(v["result"]["triangles"], 1);
    let tests = v["result"]["tests"].as_array().unwrap();
    assert_eq!(tests.len(), 3);
    assert_eq!(tests[0]["r"], 1.5);
    assert_eq!(tests[2]["r"], "inf");
    assert_eq!(tests[2]["rho"], 1.0);
    assert_eq!(tests[2]["degenerate"], true);
    assert!(tests[2]["p_seg"].is_null());
}

#[test]
fn outside_hull_and_malformed_input_are_data_errors() {
    let dir = TempDir::new().unwrap();
    let y = write_csv(dir.path(), "y.csv", &sites_13(), false);
    let x = write_csv(dir.path(), "x.csv", &[p(0.5, 0.5), p(0.2, 0.3), p(2.0, 2.0)], false);
    let (ys, xs) = (y.to_str().unwrap(), x.to_str().unwrap());
    let out = pcd(&["test", "-x", xs, "-y", ys]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("convex hull"));

    let v = json(&pcd(&["test", "-x", xs, "-y", ys, "--drop-outside"]));
    assert_eq!(v["result"]["points_read"], 3);
    assert_eq!(v["result"]["points_used"], 2);

    let bad = dir.path().join("bad.csv");
    std::fs::write(&bad, "0,0\n1,oops\n").unwrap();
    assert_eq!(pcd(&["test", "-x", bad.to_str().unwrap(), "-y", ys]).status.code(), Some(3));
    assert_eq!(pcd(&["test", "-x", "/nonexistent.csv", "-y", ys]).status.code(), Some(3));
    let two = write_csv(dir.path(), "two.csv", &[p(0.0, 0.0), p(1.0, 0.0)], false);
    assert_eq!(pcd(&["test", "-x", xs, "-y", two.to_str().unwrap()]).status.code(), Some(3));
}

#[test]
fn validation_errors_exit_with_2() {
    for args in [
        &["simulate", "--alt", "segregation"][..],
        &["simulate", "-r", "0.5"],
        &["simulate", "--alpha", "1.5"],
        &["simulate", "--alt", "association", "--eps", "2"],
        &["simulate", "--samples", "--format", "csv"],
        &["curves", "--which", "hlae", "--alt", "segregation", "--eps", "0.3"],
        &["curves", "--which", "power"],
        &["curves", "--step", "0"],
        &["efficacy", "--alt", "null"],
        &["simulate", "--bogus"],
    ] {
        assert_eq!(pcd(args).status.code(), Some(2), "{args:?}");
    }
    let out = pcd(&["curves", "--which", "hlae", "--alt", "association", "--eps", "0.1"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("5*sqrt3/24"));
}

#[test]
fn segregated_data_rejects_for_every_r() {
    let dir = TempDir::new().unwrap();
    let sites = sites_13();
    let mesh = DelaunayMesh::triangulate(&sites).unwrap();
    let mut rng = replicate_rng(77, 0);
    let alt = Alternative::segregation(3f64.sqrt() / 8.0).unwrap();
    let pts: Vec<Point> = sample_hull(&mesh, &alt, 1000, &mut rng).unwrap().into_iter().map(|(q, _)| q).collect();
    let y = write_csv(dir.path(), "y.csv", &sites, true);
    let x = write_csv(dir.path(), "x.csv", &pts, true);
    let v = json(&pcd(&["test", "-x", x.to_str().unwrap(), "-y", y.to_str().unwrap(), "-r", "1.1,1.5,2,3,5"]));
    for t in v["result"]["tests"].as_array().unwrap() {
        let p_seg = t["p_seg"].as_f64().unwrap();
        assert!(p_seg < 0.01, "r = {}: p = {p_seg}", t["r"]);
        assert_eq!(t["reject_seg"], true);
    }
}

#[test]
fn null_data_is_calibrated() {
    let dir = TempDir::new().unwrap();
    let sites = sites_13();
    let mesh = DelaunayMesh::triangulate(&sites).unwrap();
    let y = write_csv(dir.path(), "y.csv", &sites, false);
    let runs = 60;
    let mut above = 0;
    for k in 0..runs {
        let mut rng = replicate_rng(2024, k);
        let pts: Vec<Point> = sample_hull(&mesh, &Alternative::Null, 300, &mut rng).unwrap().into_iter().map(|(q, _)| q).collect();
        let x = write_csv(dir.path(), "x.csv", &pts, false);
        let v = json(&pcd(&["test", "-x", x.to_str().unwrap(), "-y", y.to_str().unwrap(), "-r", "1.5"]));
        if v["result"]["tests"][0]["p_seg"].as_f64().unwrap() > 0.05 {
            above += 1;
        }
    }
    assert!(above as f64 >= 0.9 * runs as f64, "{above} of {runs}");
}

#[test]
fn simulate_reproduces_a_table_cell_and_is_deterministic() {
    let args = ["simulate", "--alt", "segregation", "--eps", "0.2165", "-r", "1.5", "-n", "10", "-N", "10000", "--seed", "2024"];
    let a = json(&pcd(&args));
    let b = json(&pcd(&args));
    assert_eq!(a, b);
    let beta = a["result"]["empirical_power"].as_f64().unwrap();
    let band = 3.0 * (0.1955f64 * 0.8045 / 1e4).sqrt() + 0.01;
    assert!((beta - 0.1955).abs() <= band, "{beta}");
    assert_eq!(a["config"]["resolved"]["seed"], 2024);
}

#[test]
fn null_simulation_power_equals_significance() {
    let v = json(&pcd(&["simulate", "--alt", "null", "-r", "2", "-N", "2000", "--samples"]));
    let r = &v["result"];
    assert_eq!(r["empirical_power"], r["empirical_alpha"]);
    let s = r["density_samples"].as_array().unwrap();
    assert_eq!(s.len(), 2000);
    assert!(s.windows(2).all(|w| w[0].as_f64() <= w[1].as_f64()));
}

#[test]
fn simulate_csv_has_provenance_line() {
    let out = pcd(&["simulate", "-N", "500", "--format", "csv", "--seed", "3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    let first = lines.next().unwrap();
    assert!(first.starts_with(&format!("# pcd {} simulate ", pcd_core::VERSION)));
    assert!(first.contains("\"seed\":3"));
    assert!(lines.next().unwrap().starts_with("alt,eps,r,n,"));
}

fn curve_rows(args: &[&str]) -> (Vec<String>, Vec<Vec<String>>) {
    let out = pcd(args);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let mut rdr = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(&out.stdout[..]);
    let header = rdr.headers().unwrap().iter().map(String::from).collect();
    let rows = rdr.records().map(|r| r.unwrap().iter().map(String::from).collect()).collect();
    (header, rows)
}

fn argmax(rows: &[Vec<String>], col: usize) -> (f64, f64) {
    rows.iter()
        .map(|r| (r[0].parse::<f64>().unwrap(), r[col].parse::<f64>().unwrap()))
        .fold((0.0, f64::MIN), |a, b| if b.1 > a.1 { b } else { a })
}

#[test]
fn curves_match_closed_forms() {
    let (h, rows) = curve_rows(&["curves", "--which", "mu,nu", "-r", "1,2"]);
    assert_eq!(h, ["r", "mu", "nu"]);
    assert!((rows[0][1].parse::<f64>().unwrap() - 37.0 / 216.0).abs() < 1e-15);
    assert_eq!(rows[1][1].parse::<f64>().unwrap(), 5.0 / 8.0);

    let (_, rows) = curve_rows(&["curves", "--which", "nu", "--from", "1", "--to", "5", "--step", "0.001"]);
    let (r, nu) = argmax(&rows, 1);
    assert!((r - 2.045).abs() <= 0.01 && (nu - 0.1305).abs() < 5e-4, "{r} {nu}");

    let (h, rows) = curve_rows(&["curves", "--which", "pae,omega", "--from", "1", "--to", "3", "--step", "0.01"]);
    assert_eq!(h, ["r", "pae_seg", "pae_assoc", "omega"]);
    assert_eq!(rows.len(), 201);
    // The association efficacy is largest at the left end of the grid.
    assert_eq!(argmax(&rows, 2).0, 1.0);
}

#[test]
fn power_and_hlae_curves() {
    let (h, rows) = curve_rows(&["curves", "--which", "hlae,power", "--alt", "segregation", "--eps", "sqrt3/4", "-r", "1.5,1.999,2,3"]);
    assert_eq!(h, ["r", "hlae", "power"]);
    assert_eq!(rows[2][1], "inf");
    assert_eq!(rows[2][2].parse::<f64>().unwrap(), 1.0);
    assert!(rows[0][2].parse::<f64>().unwrap() > 0.05);
}

#[test]
fn efficacy_and_mesh_info() {
    let v = json(&pcd(&["efficacy", "--kind", "pae", "--alt", "segregation", "-r", "1"]));
    assert!((v["result"]["values"][0]["value"].as_f64().unwrap() - 160.0 / 9.0).abs() < 1e-9);

    let dir = TempDir::new().unwrap();
    let tri = write_csv(dir.path(), "t.csv", &[p(0.0, 0.0), p(1.0, 0.0), p(0.5, 0.8)], false);
    let multi = json(&pcd(&["efficacy", "--kind", "pae", "--alt", "association", "-r", "1.5", "-y", tri.to_str().unwrap()]));
    let single = json(&pcd(&["efficacy", "--kind", "pae", "--alt", "association", "-r", "1.5"]));
    let (a, b) = (multi["result"]["values"][0]["value"].as_f64().unwrap(), single["result"]["values"][0]["value"].as_f64().unwrap());
    assert!((a - b).abs() <= 1e-9 * b, "{a} {b}");

    let h = json(&pcd(&["efficacy", "--kind", "hlae", "--alt", "association", "--eps", "sqrt3/12", "-r", "1.5,2"]));
    assert_eq!(h["result"]["values"].as_array().unwrap().len(), 2);

    let y = write_csv(dir.path(), "y.csv", &sites_13(), false);
    let m = json(&pcd(&["mesh-info", "-y", y.to_str().unwrap(), "-r", "1.5,2"]));
    let w: f64 = m["result"]["weights"].as_array().unwrap().iter().map(|x| x.as_f64().unwrap()).sum();
    assert!((w - 1.0).abs() < 1e-12);
    assert!((m["result"]["hull_area"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert_eq!(m["result"]["null_moments"].as_array().unwrap().len(), 2);
}

#[test]
fn output_file_flag() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("c.csv");
    let o = pcd(&["curves", "-r", "1.5", "-o", out.to_str().unwrap()]);
    assert!(o.status.success() && o.stdout.is_empty());
    assert!(std::fs::read_to_string(out).unwrap().contains("r,mu,nu"));
}
