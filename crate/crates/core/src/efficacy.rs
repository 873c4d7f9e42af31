//! Pitman and Hodges-Lehmann asymptotic efficacies and the asymptotic power
//! function, for one triangle and for a Delaunay mesh with fixed weights.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::moments::{self, MomentBank};
use crate::multitriangle::WeightSums;
use crate::normal;
use crate::sampling::Alternative;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EfficacyKind {
    PaeS,
    PaeA,
    HlaeS,
    HlaeA,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EfficacyReport {
    pub r: f64,
    /// `f64::INFINITY` when the alternative variance vanishes.
    pub value: f64,
    pub kind: EfficacyKind,
    pub eps: Option<f64>,
    pub weights: Option<Vec<f64>>,
    pub infinite: bool,
}

fn null_nu(r: f64) -> Result<f64> {
    let nu = moments::nu_null(r)?;
    if nu.degenerate {
        return Err(Error::Degenerate);
    }
    Ok(nu.value)
}

/// `mu_S''(r, 0)^2 / nu(r)`.
pub fn pae_seg(r: f64) -> Result<f64> {
    let d = moments::mu_seg_dd(r)?.value;
    Ok(d * d / null_nu(r)?)
}

/// `mu_A''(r, 0)^2 / nu(r)`.
pub fn pae_assoc(r: f64) -> Result<f64> {
    let d = moments::mu_assoc_dd(r)?.value;
    Ok(d * d / null_nu(r)?)
}

fn alt_moments(bank: &MomentBank, r: f64, alt: &Alternative) -> Result<(f64, f64, bool)> {
    let m = alt_moments_raw(bank, r, alt)?;
    if m.1 < 0.0 {
        return Err(Error::NegativeVariance { r, value: m.1 });
    }
    Ok(m)
}

fn alt_moments_raw(bank: &MomentBank, r: f64, alt: &Alternative) -> Result<(f64, f64, bool)> {
    match *alt {
        Alternative::Null => Err(Error::Config("efficacy needs a non-null alternative".into())),
        Alternative::Segregation { eps } => {
            let nu = bank.nu_seg_at(r, eps)?;
            Ok((bank.mu_seg_at(r, eps)?.value, nu.value, nu.degenerate))
        }
        Alternative::Association { eps } => {
            let nu = bank.nu_assoc_at(r, eps)?;
            Ok((bank.mu_assoc_at(r, eps)?.value, nu.value, nu.degenerate))
        }
    }
}

/// `(mu_alt(r, eps) - mu(r))^2 / nu_alt(r, eps)`, with `eps` one of the
/// tabulated values. A vanishing alternative variance gives `+inf`.
pub fn hlae(r: f64, alt: &Alternative) -> Result<EfficacyReport> {
    hlae_with(&MomentBank::default(), r, alt)
}

pub fn hlae_with(bank: &MomentBank, r: f64, alt: &Alternative) -> Result<EfficacyReport> {
    let kind = match alt {
        Alternative::Association { .. } => EfficacyKind::HlaeA,
        _ => EfficacyKind::HlaeS,
    };
    let (mu_a, nu_a, degenerate) = alt_moments(bank, r, alt)?;
    let mu = moments::mu_null(r)?.value;
    let value = if degenerate { f64::INFINITY } else { (mu_a - mu).powi(2) / nu_a };
    Ok(EfficacyReport {
        r,
        value,
        kind,
        eps: alt.epsilon(),
        weights: None,
        infinite: degenerate,
    })
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::Config(format!("alpha must lie in (0, 1), got {alpha}")));
    }
    Ok(())
}

/// Normal-approximation power of the level-alpha test against the
/// alternative, at sample size n.
fn power(bank: &MomentBank, r: f64, n: usize, alt: &Alternative, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    if n < 2 {
        return Err(Error::TooFewPoints(n));
    }
    let mu = moments::mu_null(r)?.value;
    let nu = null_nu(r)?;
    let (mu_a, nu_a, degenerate) = alt_moments(bank, r, alt)?;
    let sn = (n as f64).sqrt();
    let seg = matches!(alt, Alternative::Segregation { .. });
    if seg {
        let z = normal::quantile(1.0 - alpha);
        let crit = mu + z * (nu / n as f64).sqrt();
        if degenerate {
            return Ok(if mu_a > crit { 1.0 } else { 0.0 });
        }
        Ok(normal::phi_upper(z * (nu / nu_a).sqrt() + sn * (mu - mu_a) / nu_a.sqrt()))
    } else {
        let z = normal::quantile(alpha);
        let crit = mu + z * (nu / n as f64).sqrt();
        if degenerate {
            return Ok(if mu_a < crit { 1.0 } else { 0.0 });
        }
        Ok(normal::phi(z * (nu / nu_a).sqrt() + sn * (mu - mu_a) / nu_a.sqrt()))
    }
}

/// `Pi_S(r, n, eps) = P(rho_n > mu + z_{1-alpha} sqrt(nu / n))` under segregation.
pub fn power_seg(r: f64, n: usize, eps: f64, alpha: f64) -> Result<f64> {
    power_seg_with(&MomentBank::default(), r, n, eps, alpha)
}

pub fn power_seg_with(bank: &MomentBank, r: f64, n: usize, eps: f64, alpha: f64) -> Result<f64> {
    power(bank, r, n, &Alternative::Segregation { eps }, alpha)
}

/// `Pi_A(r, n, eps) = P(rho_n < mu + z_alpha sqrt(nu / n))` under association.
pub fn power_assoc(r: f64, n: usize, eps: f64, alpha: f64) -> Result<f64> {
    power_assoc_with(&MomentBank::default(), r, n, eps, alpha)
}

pub fn power_assoc_with(bank: &MomentBank, r: f64, n: usize, eps: f64, alpha: f64) -> Result<f64> {
    power(bank, r, n, &Alternative::Association { eps }, alpha)
}

/// Multi-triangle asymptotic variance of the density from the sums of
/// squared and cubed weights.
fn nu_j(nu: f64, mu: f64, s: &WeightSums) -> f64 {
    nu * s.cubes + 4.0 * mu * mu * (s.cubes - s.squares * s.squares)
}

/// Pitman efficacy of the multi-triangle density; `seg` selects the
/// segregation or association second derivative.
pub fn pae_multi(r: f64, weights: &[f64], seg: bool) -> Result<f64> {
    let s = WeightSums::new(weights)?;
    let d = if seg { moments::mu_seg_dd(r)? } else { moments::mu_assoc_dd(r)? }.value;
    let mu = moments::mu_null(r)?.value;
    let nu = moments::nu_null(r)?.value;
    let den = nu_j(nu, mu, &s);
    if den <= 0.0 {
        return Err(Error::Degenerate);
    }
    Ok((d * s.squares).powi(2) / den)
}

/// Hodges-Lehmann efficacy of the multi-triangle density. Zero at eps = 0.
pub fn hlae_multi(r: f64, alt: &Alternative, weights: &[f64]) -> Result<EfficacyReport> {
    hlae_multi_with(&MomentBank::default(), r, alt, weights)
}

pub fn hlae_multi_with(
    bank: &MomentBank,
    r: f64,
    alt: &Alternative,
    weights: &[f64],
) -> Result<EfficacyReport> {
    let s = WeightSums::new(weights)?;
    let kind = match alt {
        Alternative::Association { .. } => EfficacyKind::HlaeA,
        _ => EfficacyKind::HlaeS,
    };
    let report = |value: f64, infinite| EfficacyReport {
        r,
        value,
        kind,
        eps: alt.epsilon(),
        weights: Some(weights.to_vec()),
        infinite,
    };
    if alt.epsilon().is_none_or(|e| e == 0.0) {
        moments::mu_null(r)?;
        return Ok(report(0.0, false));
    }
    let (mu_a, nu_a, _) = alt_moments(bank, r, alt)?;
    let mu = moments::mu_null(r)?.value;
    let num = ((mu_a - mu) * s.squares).powi(2);
    let den = nu_j(nu_a, mu_a, &s);
    if den <= 0.0 {
        return Ok(report(f64::INFINITY, true));
    }
    Ok(report(num / den, false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::SQRT3;

    #[test]
    fn pae_components_at_one() {
        // (2/27)^2 / nu(1) and (22/9)^2 / nu(1), with nu(1) from its formula.
        let nu1 = 18.0 / 58320.0;
        assert!((pae_seg(1.0).unwrap() - (2.0f64 / 27.0).powi(2) / nu1).abs() < 1e-9);
        assert!((pae_assoc(1.0).unwrap() - (22.0f64 / 9.0).powi(2) / nu1).abs() < 1e-7);
        assert!((pae_seg(1.0).unwrap() - 160.0 / 9.0).abs() < 1e-9);
        assert!((pae_assoc(1.0).unwrap() - 19360.0).abs() < 1e-7);
    }

    #[test]
    fn pae_seg_grows_without_bound() {
        let mut prev = 0.0;
        for k in 0..=48 {
            let v = pae_seg(2.0 + k as f64).unwrap();
            assert!(v > prev);
            prev = v;
        }
        assert!(prev > 1e5);
        assert!(matches!(pae_seg(f64::INFINITY), Err(Error::Degenerate)));
    }

    #[test]
    fn pae_assoc_local_max_near_1_4356() {
        let (mut best, mut arg) = (0.0, 0.0);
        let mut r = 1.3;
        while r < 1.6 {
            let v = pae_assoc(r).unwrap();
            if v > best {
                best = v;
                arg = r;
            }
            r += 1e-4;
        }
        assert!((arg - 1.4356).abs() < 1e-3, "{arg}");
        assert!((best - 3630.8932).abs() < 0.05, "{best}");
    }

    #[test]
    fn hlae_positive_and_diverges_at_threshold() {
        let eps = SQRT3 / 8.0;
        let alt = Alternative::Segregation { eps };
        let bank = MomentBank::CORRECTED;
        for k in 0..30 {
            let r = 1.0 + 0.1 * k as f64;
            assert!(hlae_with(&bank, r, &alt).unwrap().value > 0.0);
        }
        assert!(hlae_with(&bank, 3.99, &alt).unwrap().value > 1e3);
        let at = hlae_with(&bank, 4.0, &alt).unwrap();
        assert!(at.infinite && at.value.is_infinite());
    }

    #[test]
    fn hlae_assoc_degenerate_at_r_one() {
        let alt = Alternative::Association { eps: SQRT3 / 12.0 };
        let h = hlae(1.0, &alt).unwrap();
        assert!(h.infinite);
    }

    #[test]
    fn hlae_refuses_untabulated_eps() {
        let alt = Alternative::Segregation { eps: 0.3 };
        assert!(matches!(hlae(1.5, &alt), Err(Error::NoClosedForm { .. })));
    }

    #[test]
    fn power_limits() {
        let bank = MomentBank::CORRECTED;
        for n in [3, 5] {
            let p = power_seg_with(&bank, 1.995, n, SQRT3 / 4.0, 0.05).unwrap();
            assert!(p > 0.99, "{n} {p}");
        }
        for n in [5, 10, 15] {
            let p = power_seg(3.999, n, SQRT3 / 8.0, 0.05).unwrap();
            assert!(p < 0.01, "{n} {p}");
        }
        // At r = 2 the normal approximation gives 0.982 for n = 5.
        for (n, lo) in [(5, 0.97), (10, 0.999)] {
            let p = power_assoc(1.999, n, 5.0 * SQRT3 / 24.0, 0.05).unwrap();
            assert!(p > lo, "{n} {p}");
        }
    }

    #[test]
    fn power_in_unit_interval() {
        for k in 0..40 {
            let r = 1.0 + 0.1 * k as f64;
            for eps in [SQRT3 / 8.0, 2.0 * SQRT3 / 7.0] {
                let p = power_seg_with(&MomentBank::CORRECTED, r, 10, eps, 0.05).unwrap();
                assert!((0.0..=1.0).contains(&p));
            }
            for eps in [5.0 * SQRT3 / 24.0, SQRT3 / 12.0, SQRT3 / 21.0] {
                let p = power_assoc(r, 10, eps, 0.05).unwrap();
                assert!((0.0..=1.0).contains(&p));
            }
        }
    }

    #[test]
    fn single_triangle_reductions() {
        let w = [1.0];
        for r in [1.0, 1.3, 1.7, 2.5, 6.0] {
            assert!((pae_multi(r, &w, true).unwrap() - pae_seg(r).unwrap()).abs() < 1e-9 * pae_seg(r).unwrap());
            assert!((pae_multi(r, &w, false).unwrap() - pae_assoc(r).unwrap()).abs() < 1e-9 * pae_assoc(r).unwrap());
            let alt = Alternative::Association { eps: SQRT3 / 21.0 };
            let a = hlae(r, &alt).unwrap().value;
            let b = hlae_multi(r, &alt, &w).unwrap().value;
            assert!((a - b).abs() <= 1e-12 * a.abs().max(1.0));
        }
    }

    #[test]
    fn multi_pae_bounded_and_hlae_zero_at_null() {
        let w = [0.5, 0.3, 0.2];
        let s2: f64 = w.iter().map(|x| x * x).sum();
        let s3: f64 = w.iter().map(|x| x * x * x).sum();
        // mu_S'' -> 8, nu -> 0, mu -> 1.
        let limit = 16.0 * s2 * s2 / (s3 - s2 * s2);
        let far = pae_multi(1e4, &w, true).unwrap();
        assert!((far - limit).abs() < 1e-5 * limit, "{far} {limit}");
        assert_eq!(hlae_multi(1.5, &Alternative::Null, &w).unwrap().value, 0.0);
        assert_eq!(hlae_multi(1.5, &Alternative::Segregation { eps: 0.0 }, &w).unwrap().value, 0.0);
        let h = hlae_multi(1e3, &Alternative::Association { eps: SQRT3 / 12.0 }, &w).unwrap();
        assert!(h.value < 1e-4);
    }
}
