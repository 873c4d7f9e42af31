//! Seeded generation of point patterns under the null (uniform) and the
//! segregation / association alternatives.
//!
//! Alternatives are carved in barycentric coordinates, which is the same as
//! carving the standardized equilateral triangle and mapping back. For the
//! equilateral triangle with height h = sqrt3/2, the distance from vertex j to
//! the line through x parallel to the opposite edge is `(1 - l_j(x)) h`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Point, Triangle, SQRT3};
use crate::multitriangle::DelaunayMesh;

/// Upper end of the admissible epsilon range, sqrt3/3.
pub const EPS_MAX: f64 = SQRT3 / 3.0;
/// Association supports collapse onto the vertices near sqrt3/3.
pub const ASSOC_EPS_CAP: f64 = EPS_MAX - 1e-6;

const HEIGHT: f64 = SQRT3 / 2.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Alternative {
    Null,
    Segregation { eps: f64 },
    Association { eps: f64 },
}

impl Alternative {
    pub fn segregation(eps: f64) -> Result<Self> {
        if !(eps > 0.0 && eps < EPS_MAX) {
            return Err(Error::InvalidEpsilon(eps));
        }
        Ok(Alternative::Segregation { eps })
    }

    pub fn association(eps: f64) -> Result<Self> {
        if !(eps > 0.0 && eps <= ASSOC_EPS_CAP) {
            return Err(Error::InvalidEpsilon(eps));
        }
        Ok(Alternative::Association { eps })
    }

    pub fn epsilon(&self) -> Option<f64> {
        match *self {
            Alternative::Null => None,
            Alternative::Segregation { eps } | Alternative::Association { eps } => Some(eps),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Alternative::Null => Ok(()),
            Alternative::Segregation { eps } => Alternative::segregation(eps).map(|_| ()),
            Alternative::Association { eps } => Alternative::association(eps).map(|_| ()),
        }
    }

    /// Support predicate in barycentric coordinates.
    pub fn in_support(&self, l: &[f64; 3]) -> bool {
        match *self {
            Alternative::Null => true,
            Alternative::Segregation { eps } => l.iter().all(|&lj| (1.0 - lj) * HEIGHT > eps),
            Alternative::Association { eps } => {
                l.iter().any(|&lj| (1.0 - lj) * HEIGHT <= EPS_MAX - eps)
            }
        }
    }

    /// Fraction of the triangle area covered by the support.
    pub fn support_fraction(&self) -> f64 {
        match *self {
            Alternative::Null => 1.0,
            Alternative::Segregation { eps } => {
                let s = eps / HEIGHT;
                if s <= 0.5 {
                    1.0 - 3.0 * s * s
                } else {
                    // Corners overlap; what is left is the inner triangle
                    // where every coordinate is below 1 - s.
                    let t = 2.0 - 3.0 * s;
                    t.max(0.0).powi(2)
                }
            }
            Alternative::Association { eps } => {
                // Union of three corners of scale s < 2/3. Two corners
                // overlap in a corner of scale 2s - 1 once s > 1/2; a triple
                // overlap would need s >= 2/3.
                let s = (EPS_MAX - eps) / HEIGHT;
                3.0 * s * s - 3.0 * (2.0 * s - 1.0).max(0.0).powi(2)
            }
        }
    }
}

/// `delta` is the forbidden (or allowed) area fraction around each vertex;
/// the corresponding epsilon is `sqrt(3 delta / 4)`.
pub fn delta_to_epsilon(delta: f64) -> Result<f64> {
    if !(delta > 0.0 && delta < 4.0 / 9.0) {
        return Err(Error::InvalidDelta(delta));
    }
    Ok((3.0 * delta / 4.0).sqrt())
}

/// Independent random stream for one replicate: ChaCha8 keyed by the master
/// seed with the replicate id as stream selector.
pub fn replicate_rng(seed: u64, replicate_id: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(replicate_id);
    rng
}

/// Uniform barycentric coordinates by reflecting the unit square.
pub fn uniform_bary<R: Rng + ?Sized>(rng: &mut R) -> [f64; 3] {
    let mut u: f64 = rng.random();
    let mut v: f64 = rng.random();
    if u + v > 1.0 {
        u = 1.0 - u;
        v = 1.0 - v;
    }
    [1.0 - u - v, u, v]
}

/// Barycentric coordinates from the given alternative, by rejection.
pub fn alternative_bary<R: Rng + ?Sized>(alt: &Alternative, rng: &mut R) -> [f64; 3] {
    loop {
        let l = uniform_bary(rng);
        if alt.in_support(&l) {
            return l;
        }
    }
}

pub fn sample_uniform_triangle<R: Rng + ?Sized>(tri: &Triangle, n: usize, rng: &mut R) -> Vec<Point> {
    (0..n).map(|_| tri.from_barycentric(uniform_bary(rng))).collect()
}

pub fn sample_alternative<R: Rng + ?Sized>(
    tri: &Triangle,
    alt: &Alternative,
    n: usize,
    rng: &mut R,
) -> Result<Vec<Point>> {
    alt.validate()?;
    Ok((0..n)
        .map(|_| tri.from_barycentric(alternative_bary(alt, rng)))
        .collect())
}

/// Points over the convex hull of a mesh: a triangle is drawn with
/// probability equal to its weight, then a point from the alternative inside it.
pub fn sample_hull<R: Rng + ?Sized>(
    mesh: &DelaunayMesh,
    alt: &Alternative,
    n: usize,
    rng: &mut R,
) -> Result<Vec<(Point, usize)>> {
    alt.validate()?;
    if mesh.triangles.is_empty() {
        return Err(Error::EmptyMesh);
    }
    let cum: Vec<f64> = mesh
        .weights
        .iter()
        .scan(0.0, |acc, &w| {
            *acc += w;
            Some(*acc)
        })
        .collect();
    let tris = mesh.triangle_geometries();
    Ok((0..n)
        .map(|_| {
            let u: f64 = rng.random::<f64>() * cum[cum.len() - 1];
            let j = cum.partition_point(|&c| c <= u).min(cum.len() - 1);
            (tris[j].from_barycentric(alternative_bary(alt, rng)), j)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_sample() {
        let mut rng = replicate_rng(1, 0);
        assert!(sample_uniform_triangle(&Triangle::standard(), 0, &mut rng).is_empty());
    }

    #[test]
    fn delta_examples() {
        assert!((delta_to_epsilon(1.0 / 16.0).unwrap() - SQRT3 / 8.0).abs() < 1e-15);
        assert!((delta_to_epsilon(0.25).unwrap() - SQRT3 / 4.0).abs() < 1e-15);
        assert!(delta_to_epsilon(1e-12).unwrap() < 1e-5);
        assert!(delta_to_epsilon(0.0).is_err());
        assert!(delta_to_epsilon(0.5).is_err());
    }

    #[test]
    fn epsilon_validation() {
        assert!(Alternative::segregation(0.0).is_err());
        assert!(Alternative::segregation(EPS_MAX).is_err());
        assert!(Alternative::association(EPS_MAX - 1e-7).is_err());
        assert!(Alternative::association(SQRT3 / 12.0).is_ok());
    }

    #[test]
    fn support_fraction_matches_corner_areas() {
        // Corner triangle T(y, eps) has area fraction (eps / h)^2 = 4 eps^2 / 3.
        let eps = SQRT3 / 8.0;
        let f = Alternative::Segregation { eps }.support_fraction();
        assert!((f - (1.0 - 3.0 * 4.0 * eps * eps / 3.0)).abs() < 1e-15);
        // sqrt3/4 removes three quarter-area corners.
        assert!((Alternative::Segregation { eps: SQRT3 / 4.0 }.support_fraction() - 0.25).abs() < 1e-15);
        // 2 sqrt3 / 7 leaves the inner triangle with coordinates below 3/7.
        let f = Alternative::Segregation { eps: 2.0 * SQRT3 / 7.0 }.support_fraction();
        assert!((f - (2.0f64 / 7.0).powi(2)).abs() < 1e-15);
        // Association at sqrt3/12: corners of scale 1/2, no overlap.
        let f = Alternative::Association { eps: SQRT3 / 12.0 }.support_fraction();
        assert!((f - 0.75).abs() < 1e-15);
    }

    #[test]
    fn support_fraction_matches_rejection_rate() {
        let mut rng = replicate_rng(7, 3);
        let n = 200_000;
        for alt in [
            Alternative::Segregation { eps: 0.3 },
            Alternative::Segregation { eps: 0.5 },
            Alternative::Association { eps: 0.05 },
            Alternative::Association { eps: 0.3 },
        ] {
            let hits = (0..n).filter(|_| alt.in_support(&uniform_bary(&mut rng))).count();
            let p = alt.support_fraction();
            let se = (p * (1.0 - p) / n as f64).sqrt();
            assert!(((hits as f64 / n as f64) - p).abs() < 4.0 * se, "{alt:?}");
        }
    }

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a: Vec<f64> = (0..4).map(|_| replicate_rng(5, 9).random()).collect();
        let mut r1 = replicate_rng(5, 9);
        let mut r2 = replicate_rng(5, 10);
        let x: f64 = r1.random();
        let y: f64 = r2.random();
        assert_eq!(a[0], x);
        assert_ne!(x, y);
    }
}
