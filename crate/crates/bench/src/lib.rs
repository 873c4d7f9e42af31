//! Shared fixtures for the benchmarks.

use pcd_core::sampling::{replicate_rng, sample_uniform_triangle};
use pcd_core::{Point, Triangle};
use rand::Rng;

/// `n` uniform points in the standard triangle, fixed by `seed`.
pub fn triangle_points(n: usize, seed: u64) -> Vec<Point> {
    let mut rng = replicate_rng(seed, 0);
    sample_uniform_triangle(&Triangle::standard(), n, &mut rng)
}

/// `n` uniform sites in the unit square.
pub fn square_sites(n: usize, seed: u64) -> Vec<Point> {
    let mut rng = replicate_rng(seed, 1);
    (0..n).map(|_| Point::new(rng.random(), rng.random())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_deterministic() {
        assert_eq!(triangle_points(20, 1), triangle_points(20, 1));
        let t = Triangle::standard();
        assert!(triangle_points(50, 2).iter().all(|&p| t.contains(p)));
        assert_eq!(square_sites(10, 3).len(), 10);
    }
}
