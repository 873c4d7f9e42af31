//! Standard normal distribution function and quantile.
//!
//! `phi` uses the C-library `erfc` port from `libm`, accurate to about one
//! ulp; tail p-values keep full relative precision. The quantile comes from
//! `statrs`.

use statrs::distribution::{ContinuousCDF, Normal};

pub fn phi(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    0.5 * libm::erfc(-x / std::f64::consts::SQRT_2)
}

/// Upper tail `1 - phi(x)` without cancellation.
pub fn phi_upper(x: f64) -> f64 {
    phi(-x)
}

pub fn quantile(p: f64) -> f64 {
    Normal::standard().inverse_cdf(p)
}
