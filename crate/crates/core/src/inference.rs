//! The asymptotic normal test on the relative arc density and the Monte
//! Carlo engine for empirical critical values, significance and power.
//!
//! Replicates are simulated in barycentric coordinates of the standard
//! triangle; the density is geometry invariant, so this covers every
//! triangle. Replicate `j` draws from its own stream, so results do not
//! depend on the number of worker threads.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Point, ProximityParams, Triangle};
use crate::moments;
use crate::multitriangle::{self, DelaunayMesh};
use crate::normal::{phi, phi_upper, quantile};
use crate::pcd;
use crate::sampling::{alternative_bary, replicate_rng, sample_hull, Alternative};

/// Stream offset for alternative replicates, keeping them disjoint from the
/// null replicates of the same seed.
const ALT_STREAM: u64 = 1 << 40;

/// Side of the data relative to the null mean.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    Segregation,
    Association,
    TwoSidedInfo,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TestReport {
    pub rho: f64,
    pub mu0: f64,
    pub nu0: f64,
    pub n: usize,
    /// `sqrt(n) (rho - mu0) / sqrt(nu0)`; NaN when degenerate.
    pub z: f64,
    /// Upper-tail p-value, absent when degenerate.
    pub p_seg: Option<f64>,
    /// Lower-tail p-value, absent when degenerate.
    pub p_assoc: Option<f64>,
    pub direction: Direction,
    pub degenerate: bool,
    pub alpha: f64,
    pub reject_seg: bool,
    pub reject_assoc: bool,
}

/// Support of the test: one triangle or a Delaunay mesh.
#[derive(Debug, Clone, Copy)]
pub enum Region<'a> {
    Triangle(&'a Triangle),
    Mesh(&'a DelaunayMesh),
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::Config(format!("alpha must lie in (0, 1), got {alpha}")));
    }
    Ok(())
}

/// Standardized test from a density and its null moments.
pub fn report_from(rho: f64, mu0: f64, nu0: f64, n: usize, alpha: f64) -> Result<TestReport> {
    check_alpha(alpha)?;
    if n < 2 {
        return Err(Error::TooFewPoints(n));
    }
    let degenerate = !(nu0 > 0.0);
    if degenerate {
        return Ok(TestReport {
            rho,
            mu0,
            nu0,
            n,
            z: f64::NAN,
            p_seg: None,
            p_assoc: None,
            direction: Direction::TwoSidedInfo,
            degenerate,
            alpha,
            reject_seg: false,
            reject_assoc: false,
        });
    }
    let z = (n as f64).sqrt() * (rho - mu0) / nu0.sqrt();
    let (p_seg, p_assoc) = (phi_upper(z), phi(z));
    let direction = if z > 0.0 {
        Direction::Segregation
    } else if z < 0.0 {
        Direction::Association
    } else {
        Direction::TwoSidedInfo
    };
    Ok(TestReport {
        rho,
        mu0,
        nu0,
        n,
        z,
        p_seg: Some(p_seg),
        p_assoc: Some(p_assoc),
        direction,
        degenerate,
        alpha,
        reject_seg: z > quantile(1.0 - alpha),
        reject_assoc: z < quantile(alpha),
    })
}

/// Asymptotic test. On a mesh the moments are the conditional ones given the
/// triangle weights.
pub fn asymptotic_test(region: Region<'_>, params: ProximityParams, points: &[Point], alpha: f64) -> Result<TestReport> {
    check_alpha(alpha)?;
    if points.len() < 2 {
        return Err(Error::TooFewPoints(points.len()));
    }
    let r = params.r.value();
    match region {
        Region::Triangle(tri) => {
            let d = pcd::density(tri, params, points)?;
            let mu = moments::mu_null(r)?.value;
            let nu = moments::nu_null(r)?.value;
            report_from(d.rho, mu, nu, d.n, alpha)
        }
        Region::Mesh(mesh) => {
            let d = multitriangle::density_multi(mesh, params, points)?;
            let (mu, nu) = multitriangle::moments_multi(r, &mesh.weights)?;
            report_from(d.rho_j, mu, nu, d.n, alpha)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct McConfig {
    pub n: usize,
    pub replicates: usize,
    pub r: f64,
    pub alt: Alternative,
    pub alpha: f64,
    pub seed: u64,
    pub use_asymptotic_cv: bool,
}

impl McConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::TooFewPoints(self.n));
        }
        if self.replicates == 0 {
            return Err(Error::Config("replicates must be at least 1".into()));
        }
        check_alpha(self.alpha)?;
        ProximityParams::new(self.r)?;
        self.alt.validate()
    }

    /// Association rejects in the lower tail; everything else in the upper.
    pub fn lower_tail(&self) -> bool {
        matches!(self.alt, Alternative::Association { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct McResult {
    pub critical_value: f64,
    pub empirical_alpha: f64,
    pub empirical_power: f64,
    /// Replicate densities in ascending order.
    pub density_samples: Vec<f64>,
}

/// Relative densities of `replicates` samples of size n from `alt`, indexed
/// by replicate; stream ids start at `stream0`.
pub fn replicate_densities(
    n: usize,
    replicates: usize,
    r: f64,
    alt: &Alternative,
    seed: u64,
    stream0: u64,
) -> Result<Vec<f64>> {
    if n < 2 {
        return Err(Error::TooFewPoints(n));
    }
    let params = ProximityParams::new(r)?;
    alt.validate()?;
    let denom = (n * (n - 1)) as f64;
    Ok((0..replicates as u64)
        .into_par_iter()
        .map(|j| {
            let mut rng = replicate_rng(seed, stream0 + j);
            let bary: Vec<[f64; 3]> = (0..n).map(|_| alternative_bary(alt, &mut rng)).collect();
            pcd::count_arcs_bary(&bary, params) as f64 / denom
        })
        .collect())
}

fn rejects(rho: f64, critical: f64, lower: bool) -> bool {
    if lower {
        rho < critical
    } else {
        rho > critical
    }
}

fn rejection_rate(samples: &[f64], critical: f64, lower: bool) -> f64 {
    samples.iter().filter(|&&x| rejects(x, critical, lower)).count() as f64 / samples.len() as f64
}

/// Density-scale cutoff equivalent to comparing R with the normal quantile.
pub fn asymptotic_critical_value(cfg: &McConfig) -> Result<f64> {
    let mu = moments::mu_null(cfg.r)?.value;
    let nu = moments::nu_null(cfg.r)?.value;
    let q = if cfg.lower_tail() { quantile(cfg.alpha) } else { quantile(1.0 - cfg.alpha) };
    Ok(mu + q * (nu / cfg.n as f64).sqrt())
}

/// 1-based rank of the empirical critical value: `ceil((1 - alpha) N)` for
/// the upper tail, `floor(alpha N)` for the lower, kept within `1..=N`.
pub fn critical_rank(replicates: usize, alpha: f64, lower: bool) -> usize {
    let n = replicates as f64;
    // Round away representation noise so that e.g. alpha = 1/N gives N - 1.
    let snap = |x: f64| if (x - x.round()).abs() < 1e-9 { x.round() } else { x };
    let k = if lower { snap(alpha * n).floor() } else { snap((1.0 - alpha) * n).ceil() };
    (k as usize).clamp(1, replicates)
}

/// Null replicates, critical value and empirical significance.
pub fn mc_critical_value(cfg: &McConfig) -> Result<McResult> {
    cfg.validate()?;
    let mut samples = replicate_densities(cfg.n, cfg.replicates, cfg.r, &Alternative::Null, cfg.seed, 0)?;
    samples.sort_by(f64::total_cmp);
    let lower = cfg.lower_tail();
    let critical_value = if cfg.use_asymptotic_cv {
        asymptotic_critical_value(cfg)?
    } else {
        samples[critical_rank(cfg.replicates, cfg.alpha, lower) - 1]
    };
    let a = rejection_rate(&samples, critical_value, lower);
    Ok(McResult { critical_value, empirical_alpha: a, empirical_power: a, density_samples: samples })
}

/// Power of the test with the critical value of `null` under `cfg.alt`.
/// Under the null alternative the null replicates are reused, so power and
/// significance coincide.
pub fn mc_power(cfg: &McConfig, null: &McResult) -> Result<McResult> {
    cfg.validate()?;
    let stream0 = if cfg.alt == Alternative::Null { 0 } else { ALT_STREAM };
    let mut samples = replicate_densities(cfg.n, cfg.replicates, cfg.r, &cfg.alt, cfg.seed, stream0)?;
    samples.sort_by(f64::total_cmp);
    Ok(McResult {
        critical_value: null.critical_value,
        empirical_alpha: null.empirical_alpha,
        empirical_power: rejection_rate(&samples, null.critical_value, cfg.lower_tail()),
        density_samples: samples,
    })
}

/// Critical value, significance and power in one run.
pub fn mc_study(cfg: &McConfig) -> Result<McResult> {
    let null = mc_critical_value(cfg)?;
    mc_power(cfg, &null)
}

/// Empirical power at each sample size, with empirical critical values.
pub fn consistency_probe(
    r: f64,
    alt: &Alternative,
    n_list: &[usize],
    replicates: usize,
    alpha: f64,
    seed: u64,
) -> Result<Vec<f64>> {
    n_list
        .iter()
        .map(|&n| {
            let cfg = McConfig { n, replicates, r, alt: *alt, alpha, seed, use_asymptotic_cv: false };
            Ok(mc_study(&cfg)?.empirical_power)
        })
        .collect()
}

/// Multi-triangle densities of `replicates` samples of size n over the hull
/// of the mesh, drawn triangle by triangle with probability equal to weight.
pub fn mesh_replicate_densities(
    mesh: &DelaunayMesh,
    r: f64,
    alt: &Alternative,
    n: usize,
    replicates: usize,
    seed: u64,
) -> Result<Vec<f64>> {
    let params = ProximityParams::new(r)?;
    (0..replicates as u64)
        .into_par_iter()
        .map(|j| {
            let mut rng = replicate_rng(seed, j);
            let pts: Vec<Point> = sample_hull(mesh, alt, n, &mut rng)?.into_iter().map(|p| p.0).collect();
            Ok(multitriangle::density_multi(mesh, params, &pts)?.rho_j)
        })
        .collect()
}

/// Monte Carlo estimate with its standard error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct McEstimate {
    pub value: f64,
    pub se: f64,
}

const BATCHES: u64 = 64;

/// Batch-means estimate: `stat` maps a batch's RNG and size to one estimate.
fn batch_estimate<F>(samples: usize, seed: u64, stat: F) -> McEstimate
where
    F: Fn(&mut rand_chacha::ChaCha8Rng, usize) -> f64 + Sync,
{
    let per = samples.div_ceil(BATCHES as usize).max(1);
    let est: Vec<f64> = (0..BATCHES)
        .into_par_iter()
        .map(|b| stat(&mut replicate_rng(seed, b), per))
        .collect();
    let k = est.len() as f64;
    let mean = est.iter().sum::<f64>() / k;
    let var = est.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (k - 1.0);
    McEstimate { value: mean, se: (var / k).sqrt() }
}

/// `P(X_2 in N(X_1))` for two independent points from `alt`: the mean of
/// the relative density.
pub fn mc_mean(r: f64, alt: &Alternative, samples: usize, seed: u64) -> Result<McEstimate> {
    let params = ProximityParams::new(r)?;
    alt.validate()?;
    Ok(batch_estimate(samples, seed, |rng, m| {
        let hits = (0..m)
            .filter(|_| {
                let (a, b) = (alternative_bary(alt, rng), alternative_bary(alt, rng));
                crate::geometry::arc_from_bary(&a, &b, params.r)
            })
            .count();
        hits as f64 / m as f64
    }))
}

/// `Cov[h_12, h_13]` for three independent points from `alt`: the
/// asymptotic variance of the relative density.
pub fn mc_nu(r: f64, alt: &Alternative, samples: usize, seed: u64) -> Result<McEstimate> {
    let params = ProximityParams::new(r)?;
    alt.validate()?;
    let h = |a: &[f64; 3], b: &[f64; 3]| {
        crate::geometry::arc_from_bary(a, b, params.r) as u32 + crate::geometry::arc_from_bary(b, a, params.r) as u32
    };
    Ok(batch_estimate(samples, seed, |rng, m| {
        let (mut prod, mut single) = (0u64, 0u64);
        for _ in 0..m {
            let x1 = alternative_bary(alt, rng);
            let x2 = alternative_bary(alt, rng);
            let x3 = alternative_bary(alt, rng);
            let (h12, h13) = (h(&x1, &x2), h(&x1, &x3));
            prod += (h12 * h13) as u64;
            single += (h12 + h13) as u64;
        }
        let m = m as f64;
        let e = single as f64 / (2.0 * m);
        prod as f64 / m - e * e
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::SQRT3;

    fn cfg(r: f64, alt: Alternative) -> McConfig {
        McConfig { n: 10, replicates: 2000, r, alt, alpha: 0.05, seed: 7, use_asymptotic_cv: false }
    }

    #[test]
    fn mc_moments_match_null_formulas() {
        let m = mc_mean(2.0, &Alternative::Null, 200_000, 3).unwrap();
        assert!((m.value - 0.625).abs() < 4.0 * m.se);
        let v = mc_nu(2.0, &Alternative::Null, 200_000, 4).unwrap();
        assert!((v.value - 25.0 / 192.0).abs() < 4.0 * v.se);
    }

    #[test]
    fn ranks() {
        assert_eq!(critical_rank(10_000, 0.05, false), 9500);
        assert_eq!(critical_rank(10_000, 0.05, true), 500);
        assert_eq!(critical_rank(100, 0.01, false), 99);
        assert_eq!(critical_rank(100, 0.01, true), 1);
        assert_eq!(critical_rank(3, 0.1, true), 1);
        assert_eq!(critical_rank(3, 0.1, false), 3);
    }

    #[test]
    fn report_statistic() {
        let t = report_from(0.7, 0.625, 25.0 / 192.0, 100, 0.05).unwrap();
        let z = 10.0 * 0.075 / (25.0f64 / 192.0).sqrt();
        assert!((t.z - z).abs() < 1e-12);
        assert!((t.p_seg.unwrap() + t.p_assoc.unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(t.direction, Direction::Segregation);
        assert!(t.reject_seg && !t.reject_assoc);
    }

    #[test]
    fn degenerate_report() {
        let tri = Triangle::standard();
        let pts: Vec<Point> = [[0.5, 0.3, 0.2], [0.1, 0.1, 0.8], [0.3, 0.3, 0.4]]
            .iter()
            .map(|&l| tri.from_barycentric(l))
            .collect();
        let t = asymptotic_test(Region::Triangle(&tri), ProximityParams::infinite(), &pts, 0.05).unwrap();
        assert!(t.degenerate);
        assert_eq!(t.rho, 1.0);
        assert!(t.p_seg.is_none() && t.p_assoc.is_none());
        assert!(asymptotic_test(Region::Triangle(&tri), ProximityParams::infinite(), &pts[..1], 0.05).is_err());
    }

    #[test]
    fn deterministic_across_runs() {
        let c = cfg(1.5, Alternative::Segregation { eps: SQRT3 / 8.0 });
        let a = mc_study(&c).unwrap();
        let b = mc_study(&c).unwrap();
        assert_eq!(a, b);
        let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let s = one.install(|| mc_study(&c).unwrap());
        assert_eq!(a, s);
    }

    #[test]
    fn null_power_equals_alpha() {
        let c = cfg(2.0, Alternative::Null);
        let m = mc_study(&c).unwrap();
        assert_eq!(m.empirical_power, m.empirical_alpha);
        assert!(m.empirical_alpha <= 0.05);
    }

    #[test]
    fn order_statistic_edge() {
        let mut c = cfg(2.0, Alternative::Null);
        c.replicates = 200;
        c.alpha = 1.0 / 200.0;
        let m = mc_critical_value(&c).unwrap();
        assert_eq!(m.critical_value, m.density_samples[198]);
        assert!(m.density_samples.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn degenerate_segregation_is_all_ones() {
        let d = replicate_densities(10, 200, 4.0 + 1e-9, &Alternative::Segregation { eps: SQRT3 / 8.0 }, 1, 0).unwrap();
        assert!(d.iter().all(|&x| x == 1.0));
    }

    #[test]
    fn strong_segregation_has_power() {
        let m = mc_study(&cfg(4.0 / 3.0, Alternative::Segregation { eps: SQRT3 / 4.0 })).unwrap();
        assert!(m.empirical_power > 0.95);
    }

    #[test]
    fn rejects_bad_config() {
        let mut c = cfg(2.0, Alternative::Null);
        c.alpha = 1.0;
        assert!(mc_critical_value(&c).is_err());
        c.alpha = 0.05;
        c.replicates = 0;
        assert!(mc_critical_value(&c).is_err());
        c.replicates = 10;
        c.r = 0.5;
        assert!(mc_critical_value(&c).is_err());
    }
}
