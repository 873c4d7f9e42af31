use pcd_bench::{square_sites, triangle_points};
use pcd_core::pcd::density;
use pcd_core::{DelaunayMesh, ProximityParams, Triangle};

#[test]
fn bench_inputs_are_valid() {
    let t = Triangle::standard();
    let d = density(&t, ProximityParams::new(1.5).unwrap(), &triangle_points(100, 7)).unwrap();
    assert!(d.rho > 0.0 && d.rho < 1.0);
    let mesh = DelaunayMesh::triangulate(&square_sites(100, 11)).unwrap();
    assert!(mesh.len() > 100);
    assert!((mesh.weights.iter().sum::<f64>() - 1.0).abs() < 1e-12);
}
