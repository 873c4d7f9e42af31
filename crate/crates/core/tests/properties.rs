use pcd_core::geometry::{self, arc_from_bary, standardize, vertex_from_bary, RFactor};
use pcd_core::inference::{mc_study, replicate_densities};
use pcd_core::moments::{self, MomentBank};
use pcd_core::multitriangle::{density_multi, moments_multi, DelaunayMesh};
use pcd_core::pcd::{build_digraph, density};
use pcd_core::sampling::{alternative_bary, replicate_rng, sample_uniform_triangle, Alternative, EPS_MAX};
use pcd_core::{McConfig, Point, ProximityParams, Triangle};
use proptest::prelude::*;

fn point() -> impl Strategy<Value = Point> {
    (-10.0..10.0f64, -10.0..10.0f64).prop_map(|(x, y)| Point::new(x, y))
}

fn triangle() -> impl Strategy<Value = Triangle> {
    (point(), point(), point())
        .prop_filter_map("degenerate", |(a, b, c)| {
            let t = Triangle::new(a, b, c).ok()?;
            // Keep shapes where floating point error stays small.
            let min_h = (0..3).map(|j| t.height(j)).fold(f64::MAX, f64::min);
            (min_h > 0.05).then_some(t)
        })
}

fn bary() -> impl Strategy<Value = [f64; 3]> {
    (0.0..1.0f64, 0.0..1.0f64).prop_map(|(u, v)| {
        let (u, v) = if u + v > 1.0 { (1.0 - u, 1.0 - v) } else { (u, v) };
        [1.0 - u - v, u, v]
    })
}

fn r_factor() -> impl Strategy<Value = f64> {
    prop_oneof![1.0..6.0f64, Just(1.0), Just(1.5), Just(2.0)]
}

/// Gift wrapping; independent of the mesh code.
fn convex_hull_area(pts: &[Point]) -> f64 {
    let cross = |o: Point, a: Point, b: Point| (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
    let start = pts.iter().copied().fold(pts[0], |m, p| if (p.x, p.y) < (m.x, m.y) { p } else { m });
    let mut hull = vec![start];
    loop {
        let cur = *hull.last().unwrap();
        let mut next = if pts[0] == cur { pts[1] } else { pts[0] };
        for &p in pts {
            let c = cross(cur, next, p);
            let farther = (p.x - cur.x).hypot(p.y - cur.y) > (next.x - cur.x).hypot(next.y - cur.y);
            if c < 0.0 || (c == 0.0 && farther) {
                next = p;
            }
        }
        if next == start {
            break;
        }
        hull.push(next);
    }
    let n = hull.len();
    0.5 * (0..n).map(|i| hull[i].x * hull[(i + 1) % n].y - hull[(i + 1) % n].x * hull[i].y).sum::<f64>()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn barycentric_round_trip(t in triangle(), l in bary()) {
        let p = t.from_barycentric(l);
        let back = t.barycentric(p);
        for j in 0..3 {
            prop_assert!((back[j] - l[j]).abs() < 1e-9);
        }
        prop_assert!(t.contains(p));
    }

    #[test]
    fn arcs_are_reflexive_and_monotone_in_r(lx in bary(), lz in bary(), r in r_factor(), dr in 0.0..3.0f64) {
        prop_assert!(arc_from_bary(&lx, &lx, RFactor::Finite(r)));
        if arc_from_bary(&lx, &lz, RFactor::Finite(r)) {
            prop_assert!(arc_from_bary(&lx, &lz, RFactor::Finite(r + dr)));
        }
        prop_assert!(arc_from_bary(&lx, &lz, RFactor::Infinite));
    }

    #[test]
    fn arc_agrees_with_polygon_region(t in triangle(), lx in bary(), lz in bary(), r in r_factor()) {
        let params = ProximityParams::new(r).unwrap();
        let (x, z) = (t.from_barycentric(lx), t.from_barycentric(lz));
        let region = geometry::proximity_region(&t, params, x).unwrap();
        // Skip points within rounding distance of the region boundary.
        let v = vertex_from_bary(&lx);
        let margin = (1.0 - lz[v]) - r * (1.0 - lx[v]);
        prop_assume!(margin.abs() > 1e-7);
        prop_assume!((lx[v] - lx[(v + 1) % 3]).abs() > 1e-9 && (lx[v] - lx[(v + 2) % 3]).abs() > 1e-9);
        prop_assert_eq!(geometry::contains(&region, z), margin < 0.0);
    }

    #[test]
    fn region_area_grows_with_r(t in triangle(), lx in bary(), r in 1.0..4.0f64) {
        let x = t.from_barycentric(lx);
        let a1 = geometry::proximity_region(&t, ProximityParams::new(r).unwrap(), x).unwrap().area();
        let a2 = geometry::proximity_region(&t, ProximityParams::new(r + 0.5).unwrap(), x).unwrap().area();
        prop_assert!(a1 <= a2 + 1e-9 * t.area);
        prop_assert!(a2 <= t.area * (1.0 + 1e-9));
    }

    #[test]
    fn density_is_affine_invariant(t in triangle(), seed in any::<u64>(), r in r_factor()) {
        let std = Triangle::standard();
        let mut rng = replicate_rng(seed, 0);
        let pts = sample_uniform_triangle(&std, 15, &mut rng);
        let params = ProximityParams::new(r).unwrap();
        let base = density(&std, params, &pts).unwrap();
        let moved: Vec<Point> = pts.iter().map(|&p| t.from_barycentric(std.barycentric(p))).collect();
        let other = density(&t, params, &moved).unwrap();
        // Arcs within rounding distance of the boundary may flip.
        prop_assert!((base.arc_count as i64 - other.arc_count as i64).abs() <= 1);
        let map = standardize(&t).unwrap();
        let back: Vec<Point> = moved.iter().map(|&p| map.apply(p)).collect();
        for (p, q) in pts.iter().zip(&back) {
            prop_assert!((p.x - q.x).abs() < 1e-8 && (p.y - q.y).abs() < 1e-8);
        }
    }

    #[test]
    fn density_bounds_and_kernel(seed in any::<u64>(), n in 2usize..25, r in r_factor()) {
        let t = Triangle::standard();
        let mut rng = replicate_rng(seed, 1);
        let pts = sample_uniform_triangle(&t, n, &mut rng);
        let d = build_digraph(&t, ProximityParams::new(r).unwrap(), &pts).unwrap();
        let rho = d.relative_density().unwrap().rho;
        prop_assert!((0.0..=1.0).contains(&rho));
        let mut total = 0usize;
        for i in 0..n {
            for j in (i + 1)..n {
                total += d.pair_kernel(i, j).unwrap() as usize;
            }
        }
        prop_assert_eq!(total, d.arc_count());
    }

    #[test]
    fn alternative_samples_stay_in_support(seed in any::<u64>(), eps in 0.001..(EPS_MAX - 0.01), seg in any::<bool>()) {
        let alt = if seg { Alternative::Segregation { eps } } else { Alternative::Association { eps } };
        let mut rng = replicate_rng(seed, 2);
        for _ in 0..20 {
            let l = alternative_bary(&alt, &mut rng);
            prop_assert!(alt.in_support(&l));
            prop_assert!((l.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn null_moments_in_range(r in 1.0..50.0f64) {
        let mu = moments::mu_null(r).unwrap().value;
        let nu = moments::nu_null(r).unwrap().value;
        let om = moments::omega_var_h(r).unwrap().value;
        prop_assert!((0.0..=1.0).contains(&mu));
        prop_assert!((0.0..=0.25).contains(&nu));
        prop_assert!((0.0..=1.0).contains(&om));
        prop_assert!(moments::mu_null(r + 0.01).unwrap().value > mu);
    }

    #[test]
    fn alternative_means_bracket_null(r in 1.0..8.0f64, eps in 0.001..(EPS_MAX - 0.001)) {
        let b = MomentBank::CORRECTED;
        let m = moments::mu_null(r).unwrap().value;
        let s = b.mu_seg(r, eps).unwrap().value;
        let a = b.mu_assoc(r, eps).unwrap().value;
        prop_assert!(s > m || s == 1.0);
        prop_assert!(a < m);
        prop_assert!((0.0..=1.0).contains(&s) && (0.0..=1.0).contains(&a));
    }

    #[test]
    fn mesh_weights_and_delaunay(pts in prop::collection::vec(point(), 3..80)) {
        let m = match DelaunayMesh::triangulate(&pts) {
            Ok(m) => m,
            Err(_) => return Ok(()),
        };
        prop_assert!((m.weights.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        prop_assert!(m.weights.iter().all(|&w| w > 0.0));
        prop_assert!(m.max_circumcircle_violation() <= 1e-9);
    }

    #[test]
    fn lattice_meshes_tile_the_hull(w in 2usize..9, h in 2usize..9, skip in any::<u64>()) {
        // Integer lattices are full of cocircular quadruples.
        let pts: Vec<Point> = (0..w * h)
            .filter(|&k| k == 0 || k == w - 1 || k == w * h - 1 || skip >> (k % 64) & 1 == 0)
            .map(|k| Point::new((k % w) as f64, (k / w) as f64))
            .collect();
        let m = match DelaunayMesh::triangulate(&pts) {
            Ok(m) => m,
            Err(_) => return Ok(()),
        };
        prop_assert!(m.weights.iter().all(|&x| x > 0.0));
        prop_assert!(m.max_circumcircle_violation() <= 1e-9);
        prop_assert!((m.hull_area() - convex_hull_area(&pts)).abs() < 1e-9);
    }

    #[test]
    fn multi_variance_nonnegative(w in prop::collection::vec(0.01..1.0f64, 1..8), r in 1.0..10.0f64) {
        let s: f64 = w.iter().sum();
        let w: Vec<f64> = w.iter().map(|x| x / s).collect();
        let (mu, nu) = moments_multi(r, &w).unwrap();
        prop_assert!(nu >= 0.0);
        prop_assert!(mu <= moments::mu_null(r).unwrap().value + 1e-15);
    }
}

#[test]
fn single_triangle_mesh_matches_single_density() {
    let t = Triangle::standard();
    let mesh = DelaunayMesh::triangulate(&t.vertices).unwrap();
    let mut rng = replicate_rng(5, 0);
    let pts = sample_uniform_triangle(&t, 40, &mut rng);
    let params = ProximityParams::new(1.7).unwrap();
    let a = density_multi(&mesh, params, &pts).unwrap();
    let b = density(&t, params, &pts).unwrap();
    assert_eq!(a.rho_j, b.rho);
    assert_eq!(a.arc_count, b.arc_count);
}

#[test]
fn mc_is_reproducible_across_thread_counts() {
    let cfg = McConfig {
        n: 12,
        replicates: 500,
        r: 1.5,
        alt: Alternative::Association { eps: 5.0 * 3f64.sqrt() / 24.0 },
        alpha: 0.05,
        seed: 99,
        use_asymptotic_cv: false,
    };
    let a = mc_study(&cfg).unwrap();
    for threads in [1, 3] {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        assert_eq!(pool.install(|| mc_study(&cfg).unwrap()), a);
    }
    let d1 = replicate_densities(8, 50, 2.0, &Alternative::Null, 1, 0).unwrap();
    let d2 = replicate_densities(8, 50, 2.0, &Alternative::Null, 2, 0).unwrap();
    assert_ne!(d1, d2);
}
