use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use pcd_bench::{square_sites, triangle_points};
use pcd_core::inference::mc_study;
use pcd_core::moments::{self, MomentBank};
use pcd_core::multitriangle::density_multi;
use pcd_core::pcd::density;
use pcd_core::sampling::{replicate_rng, sample_hull};
use pcd_core::{Alternative, DelaunayMesh, McConfig, ProximityParams, Triangle};

fn arc_density(c: &mut Criterion) {
    let t = Triangle::standard();
    let params = ProximityParams::new(1.5).unwrap();
    let mut g = c.benchmark_group("density");
    for n in [10, 100, 1000] {
        let pts = triangle_points(n, 7);
        g.bench_with_input(BenchmarkId::from_parameter(n), &pts, |b, pts| b.iter(|| density(&t, params, black_box(pts)).unwrap()));
    }
    g.finish();
}

fn triangulation(c: &mut Criterion) {
    let mut g = c.benchmark_group("delaunay");
    for n in [10, 100, 1000] {
        let sites = square_sites(n, 11);
        g.bench_with_input(BenchmarkId::from_parameter(n), &sites, |b, s| b.iter(|| DelaunayMesh::triangulate(black_box(s)).unwrap()));
    }
    g.finish();
}

fn multi_density(c: &mut Criterion) {
    let mesh = DelaunayMesh::triangulate(&square_sites(50, 13)).unwrap();
    let mut rng = replicate_rng(13, 2);
    let pts: Vec<_> = sample_hull(&mesh, &Alternative::Null, 2000, &mut rng).unwrap().into_iter().map(|(p, _)| p).collect();
    let params = ProximityParams::new(2.0).unwrap();
    c.bench_function("density_multi/50 sites, 2000 points", |b| b.iter(|| density_multi(&mesh, params, black_box(&pts)).unwrap()));
}

fn moment_bank(c: &mut Criterion) {
    let rs: Vec<f64> = (0..1000).map(|k| 1.0 + k as f64 * 0.005).collect();
    let bank = MomentBank::CORRECTED;
    let eps = 3f64.sqrt() / 8.0;
    c.bench_function("moments/null grid", |b| {
        b.iter(|| rs.iter().map(|&r| moments::mu_null(r).unwrap().value + moments::nu_null(r).unwrap().value).sum::<f64>())
    });
    c.bench_function("moments/mu_seg grid", |b| b.iter(|| rs.iter().map(|&r| bank.mu_seg(r, eps).unwrap().value).sum::<f64>()));
}

fn monte_carlo(c: &mut Criterion) {
    let cfg = McConfig {
        n: 10,
        replicates: 1000,
        r: 1.5,
        alt: Alternative::Segregation { eps: 3f64.sqrt() / 8.0 },
        alpha: 0.05,
        seed: 1,
        use_asymptotic_cv: false,
    };
    let mut g = c.benchmark_group("mc");
    g.sample_size(20);
    g.bench_function("study n=10 N=1000", |b| b.iter(|| mc_study(black_box(&cfg)).unwrap()));
    g.finish();
}

criterion_group!(benches, arc_density, triangulation, multi_density, moment_bank, monte_carlo);
criterion_main!(benches);
