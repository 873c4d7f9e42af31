//! Closed-form moments of the relative arc density.
//!
//! Null mean `mu`, asymptotic variance `nu` and kernel variance `omega`; the
//! means `mu_S(r, eps)`, `mu_A(r, eps)` under the alternatives for every
//! `eps`; their second derivatives at `eps = 0`; and the alternative variances
//! at the six `eps` values where a closed form exists.
//!
//! Every piece is valid on a half-open interval `[lo, hi)` in r. A handful of
//! published pieces disagree with exact evaluation. They are kept as printed
//! and the replacement is used only under [`Transcription::Corrected`]; see
//! [`QUARANTINE`].

mod eval;
mod tables;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::SQRT3;
use eval::{locate, Piece, Ratio2};
use tables::*;

/// Which coefficients to use where the published tables are known to be wrong.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Transcription {
    #[default]
    Verbatim,
    Corrected,
}

/// A quarantined table entry.
#[derive(Debug, Clone, Copy)]
pub struct QuarantineEntry {
    pub table: &'static str,
    pub piece: &'static str,
    pub note: &'static str,
}

pub const QUARANTINE: &[QuarantineEntry] = &[
    QuarantineEntry {
        table: "nu_S(r, sqrt3/4)",
        piece: "5, r in [3/2, 2)",
        note: "published numerator is negative on most of the interval; \
               corrected piece vanishes to fourth order at r = 2",
    },
    QuarantineEntry {
        table: "mu_S(r, eps), eps in [sqrt3/4, sqrt3/3)",
        piece: "breakpoint between pieces 1 and 2",
        note: "printed as 3 - 2 eps/sqrt3, which exceeds the degeneracy threshold; \
               corrected to 3 - 2 sqrt3 eps",
    },
    QuarantineEntry {
        table: "mu_S(r, eps), eps in [sqrt3/6, sqrt3/4)",
        piece: "breakpoint order for eps < sqrt3/5",
        note: "the published order needs sqrt3/(2 eps) - 1 <= 3/2; below sqrt3/5 the \
               pieces on [3/2, 2) are varpi_{1,4} then varpi_{3,4}, split at sqrt3/(2 eps) - 1",
    },
    QuarantineEntry {
        table: "mu_A(r, eps), eps < sqrt3/12",
        piece: "varpi_{1,3}",
        note: "published form has the wrong sign; corrected piece recovered from exact evaluation",
    },
    QuarantineEntry {
        table: "mu_A(r, eps), eps < sqrt3/12",
        piece: "varpi_{1,6}, r >= 2",
        note: "published form does not reduce to the null mean at eps = 0; \
               corrected piece integrates the published second derivative",
    },
];

/// Evaluation result with interval bookkeeping.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MomentValue {
    pub value: f64,
    /// 1-based index of the piece in r; 0 for the `r = inf` limit.
    pub regime: usize,
    /// 1-based epsilon regime for the general alternative means.
    pub eps_regime: Option<usize>,
    /// The statistic is a point mass: zero variance, or a mean of 1.
    pub degenerate: bool,
}

impl MomentValue {
    fn mean(value: f64, regime: usize) -> Self {
        MomentValue { value, regime, eps_regime: None, degenerate: value == 1.0 }
    }

    fn variance(value: f64, regime: usize) -> Self {
        // Pieces that vanish at a breakpoint leave rounding noise.
        let value = if value.abs() < 1e-14 { 0.0 } else { value };
        MomentValue { value, regime, eps_regime: None, degenerate: value == 0.0 }
    }
}

fn check_r(r: f64) -> Result<()> {
    if r.is_nan() || r < 1.0 {
        return Err(Error::InvalidR(r));
    }
    Ok(())
}

fn eval_table(t: &[Piece], r: f64) -> Result<(f64, usize)> {
    check_r(r)?;
    match locate(t, r) {
        Some(i) => Ok((t[i].f.eval(r), i + 1)),
        None => Err(Error::InvalidR(r)),
    }
}

pub fn mu_null(r: f64) -> Result<MomentValue> {
    check_r(r)?;
    if r.is_infinite() {
        return Ok(MomentValue::mean(1.0, 0));
    }
    let (v, k) = eval_table(MU_NULL, r)?;
    Ok(MomentValue::mean(v, k))
}

pub fn nu_null(r: f64) -> Result<MomentValue> {
    check_r(r)?;
    if r.is_infinite() {
        return Ok(MomentValue::variance(0.0, 0));
    }
    let (v, k) = eval_table(NU_NULL, r)?;
    Ok(MomentValue::variance(v, k))
}

/// `Var[h_12]`, the variance of the pair kernel.
pub fn omega_var_h(r: f64) -> Result<MomentValue> {
    check_r(r)?;
    if r.is_infinite() {
        return Ok(MomentValue::variance(0.0, 0));
    }
    let (v, k) = eval_table(OMEGA, r)?;
    Ok(MomentValue::variance(v, k))
}

/// Exact finite-sample variance of the relative density under the null.
pub fn finite_sample_var_rho(r: f64, n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::TooFewPoints(n));
    }
    let nf = n as f64;
    let om = omega_var_h(r)?.value;
    let nu = nu_null(r)?.value;
    Ok(om / (2.0 * nf * (nf - 1.0)) + (nf - 2.0) / (nf * (nf - 1.0)) * nu)
}

/// Second derivative of `mu_S(r, eps)` in eps at eps = 0.
pub fn mu_seg_dd(r: f64) -> Result<MomentValue> {
    check_r(r)?;
    if r.is_infinite() {
        return Ok(MomentValue::mean(8.0, 0));
    }
    let (v, k) = eval_table(MU_SEG_DD, r)?;
    Ok(MomentValue { value: v, regime: k, eps_regime: None, degenerate: false })
}

/// Second derivative of `mu_A(r, eps)` in eps at eps = 0. Negative for
/// r >= 2; only its square enters the efficacy.
pub fn mu_assoc_dd(r: f64) -> Result<MomentValue> {
    check_r(r)?;
    if r.is_infinite() {
        return Ok(MomentValue { value: 0.0, regime: 0, eps_regime: None, degenerate: false });
    }
    let (v, k) = eval_table(MU_ASSOC_DD, r)?;
    Ok(MomentValue { value: v, regime: k, eps_regime: None, degenerate: false })
}

/// Smallest r at which the digraph is complete almost surely under
/// segregation. Infinite at eps = 0.
pub fn degeneracy_threshold_seg(eps: f64) -> Result<f64> {
    if !(0.0..crate::sampling::EPS_MAX).contains(&eps) {
        return Err(Error::InvalidEpsilon(eps));
    }
    if eps == 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(if eps <= SQRT3 / 4.0 { SQRT3 / (2.0 * eps) } else { SQRT3 / eps - 2.0 })
}

// General-epsilon means.

type Bound = fn(f64) -> f64;

struct GPiece {
    lo: Bound,
    hi: Bound,
    f: Option<&'static Ratio2>,
}

const fn gp(lo: Bound, hi: Bound, f: &'static Ratio2) -> GPiece {
    GPiece { lo, hi, f: Some(f) }
}

const fn one(lo: Bound) -> GPiece {
    GPiece { lo, hi: |_| f64::INFINITY, f: None }
}

fn c1(_: f64) -> f64 {
    1.0
}
fn c3_2(_: f64) -> f64 {
    1.5
}
fn c2(_: f64) -> f64 {
    2.0
}
fn cinf(_: f64) -> f64 {
    f64::INFINITY
}
fn s_a(e: f64) -> f64 {
    1.5 - SQRT3 * e
}
fn s_b(e: f64) -> f64 {
    2.0 - 4.0 * e / SQRT3
}
fn s_c(e: f64) -> f64 {
    SQRT3 / (2.0 * e) - 1.0
}
fn s_d(e: f64) -> f64 {
    SQRT3 / (2.0 * e)
}
fn s_e_printed(e: f64) -> f64 {
    3.0 - 2.0 * e / SQRT3
}
fn s_e(e: f64) -> f64 {
    3.0 - 2.0 * SQRT3 * e
}
fn s_f(e: f64) -> f64 {
    SQRT3 / e - 2.0
}
fn a_1(e: f64) -> f64 {
    (1.0 + 2.0 * SQRT3 * e) / (1.0 - SQRT3 * e)
}
fn a_2(e: f64) -> f64 {
    4.0 * (1.0 - SQRT3 * e) / 3.0
}
fn a_3(e: f64) -> f64 {
    4.0 * (1.0 + 2.0 * SQRT3 * e) / 3.0
}
fn a_4(e: f64) -> f64 {
    3.0 / (2.0 * (1.0 - SQRT3 * e))
}
fn a_5(e: f64) -> f64 {
    (1.0 + 2.0 * SQRT3 * e) / (2.0 * (1.0 - SQRT3 * e))
}

static SEG_1: [GPiece; 7] = [
    gp(c1, s_a, &VARPI_S_1_1),
    gp(s_a, c3_2, &VARPI_S_1_2),
    gp(c3_2, s_b, &VARPI_S_1_3),
    gp(s_b, c2, &VARPI_S_1_4),
    gp(c2, s_c, &VARPI_S_1_5),
    gp(s_c, s_d, &VARPI_S_1_6),
    one(s_d),
];
static SEG_2: [GPiece; 7] = [
    gp(c1, s_a, &VARPI_S_1_1),
    gp(s_a, s_b, &VARPI_S_1_2),
    gp(s_b, c3_2, &VARPI_S_2_3),
    gp(c3_2, c2, &VARPI_S_1_4),
    gp(c2, s_c, &VARPI_S_1_5),
    gp(s_c, s_d, &VARPI_S_1_6),
    one(s_d),
];
static SEG_3: [GPiece; 6] = [
    gp(c1, s_b, &VARPI_S_1_2),
    gp(s_b, s_c, &VARPI_S_3_2),
    gp(s_c, c3_2, &VARPI_S_3_3),
    gp(c3_2, c2, &VARPI_S_3_4),
    gp(c2, s_d, &VARPI_S_3_5),
    one(s_d),
];
/// Regime 3 for eps in [sqrt3/6, sqrt3/5), where `sqrt3/(2 eps) - 1` lies
/// above 3/2 and the published ordering of breakpoints does not hold.
static SEG_3A: [GPiece; 6] = [
    gp(c1, s_b, &VARPI_S_1_2),
    gp(s_b, c3_2, &VARPI_S_3_2),
    gp(c3_2, s_c, &VARPI_S_1_4),
    gp(s_c, c2, &VARPI_S_3_4),
    gp(c2, s_d, &VARPI_S_3_5),
    one(s_d),
];
static SEG_4_PRINTED: [GPiece; 3] = [
    gp(c1, s_e_printed, &VARPI_S_4_1),
    gp(s_e_printed, s_f, &VARPI_S_4_2),
    one(s_f),
];
static SEG_4: [GPiece; 3] = [gp(c1, s_e, &VARPI_S_4_1), gp(s_e, s_f, &VARPI_S_4_2), one(s_f)];

static ASSOC_1_PRINTED: [GPiece; 6] = [
    gp(c1, a_1, &VARPI_A_1_1),
    gp(a_1, a_2, &VARPI_A_1_2),
    gp(a_2, a_3, &VARPI_A_1_3),
    gp(a_3, a_4, &VARPI_A_1_4),
    gp(a_4, c2, &VARPI_A_1_5),
    gp(c2, cinf, &VARPI_A_1_6),
];
static ASSOC_1: [GPiece; 6] = [
    gp(c1, a_1, &VARPI_A_1_1),
    gp(a_1, a_2, &VARPI_A_1_2),
    gp(a_2, a_3, &VARPI_A_1_3_FIX),
    gp(a_3, a_4, &VARPI_A_1_4),
    gp(a_4, c2, &VARPI_A_1_5),
    gp(c2, cinf, &VARPI_A_1_6_FIX),
];
static ASSOC_2_PRINTED: [GPiece; 6] = [
    gp(c1, a_2, &VARPI_A_1_1),
    gp(a_2, a_1, &VARPI_A_2_2),
    gp(a_1, a_3, &VARPI_A_1_3),
    gp(a_3, a_4, &VARPI_A_1_4),
    gp(a_4, c2, &VARPI_A_1_5),
    gp(c2, cinf, &VARPI_A_1_6),
];
static ASSOC_2: [GPiece; 6] = [
    gp(c1, a_2, &VARPI_A_1_1),
    gp(a_2, a_1, &VARPI_A_2_2),
    gp(a_1, a_3, &VARPI_A_1_3_FIX),
    gp(a_3, a_4, &VARPI_A_1_4),
    gp(a_4, c2, &VARPI_A_1_5),
    gp(c2, cinf, &VARPI_A_1_6_FIX),
];
static ASSOC_3: [GPiece; 3] = [
    gp(c1, a_5, &VARPI_A_3_1),
    gp(a_5, a_4, &VARPI_A_3_2),
    gp(a_4, cinf, &VARPI_A_3_3),
];

/// Upper end of the first association regime, (7 sqrt3 - 3 sqrt15)/12.
pub fn assoc_regime_boundary() -> f64 {
    (7.0 * SQRT3 - 3.0 * 15f64.sqrt()) / 12.0
}

fn eval_general(pieces: &[GPiece], r: f64, eps: f64, eps_regime: usize) -> Result<MomentValue> {
    for (i, p) in pieces.iter().enumerate() {
        if (p.lo)(eps) <= r && r < (p.hi)(eps) {
            let value = p.f.map_or(1.0, |f| f.eval(r, eps));
            let mut m = MomentValue::mean(value, i + 1);
            m.eps_regime = Some(eps_regime);
            return Ok(m);
        }
    }
    Err(Error::InvalidR(r))
}

fn check_eps(eps: f64) -> Result<()> {
    if !(0.0..crate::sampling::EPS_MAX).contains(&eps) {
        return Err(Error::InvalidEpsilon(eps));
    }
    Ok(())
}

/// Closed-form moment evaluation with a chosen transcription.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MomentBank {
    pub transcription: Transcription,
}

impl MomentBank {
    pub const VERBATIM: MomentBank = MomentBank { transcription: Transcription::Verbatim };
    pub const CORRECTED: MomentBank = MomentBank { transcription: Transcription::Corrected };

    fn corrected(&self) -> bool {
        self.transcription == Transcription::Corrected
    }

    /// Mean of the relative density under segregation with parameter eps.
    pub fn mu_seg(&self, r: f64, eps: f64) -> Result<MomentValue> {
        check_r(r)?;
        check_eps(eps)?;
        if eps == 0.0 {
            return mu_null(r);
        }
        if r.is_infinite() {
            return Ok(MomentValue::mean(1.0, 0));
        }
        let (pieces, k): (&[GPiece], usize) = if eps < SQRT3 / 8.0 {
            (&SEG_1, 1)
        } else if eps < SQRT3 / 6.0 {
            (&SEG_2, 2)
        } else if eps < SQRT3 / 5.0 && self.corrected() {
            (&SEG_3A, 3)
        } else if eps < SQRT3 / 4.0 {
            (&SEG_3, 3)
        } else if self.corrected() {
            (&SEG_4, 4)
        } else {
            (&SEG_4_PRINTED, 4)
        };
        eval_general(pieces, r, eps, k)
    }

    /// Mean of the relative density under association with parameter eps.
    pub fn mu_assoc(&self, r: f64, eps: f64) -> Result<MomentValue> {
        check_r(r)?;
        check_eps(eps)?;
        if eps == 0.0 {
            return mu_null(r);
        }
        if r.is_infinite() {
            return Ok(MomentValue::mean(1.0, 0));
        }
        let c = self.corrected();
        let (pieces, k): (&[GPiece], usize) = if eps < assoc_regime_boundary() {
            (if c { &ASSOC_1 } else { &ASSOC_1_PRINTED }, 1)
        } else if eps < SQRT3 / 12.0 {
            (if c { &ASSOC_2 } else { &ASSOC_2_PRINTED }, 2)
        } else {
            (&ASSOC_3, 3)
        };
        eval_general(pieces, r, eps, k)
    }

    /// Mean under segregation from the table for one of the tabulated eps.
    pub fn mu_seg_at(&self, r: f64, eps: f64) -> Result<MomentValue> {
        let key = EpsKey::segregation(eps)?;
        specific(key.mu_table(), r, key.threshold(), true)
    }

    pub fn mu_assoc_at(&self, r: f64, eps: f64) -> Result<MomentValue> {
        let key = EpsKey::association(eps)?;
        specific(key.mu_table(), r, key.threshold(), true)
    }

    /// Asymptotic variance under segregation; closed forms exist only at
    /// eps in {sqrt3/8, sqrt3/4, 2 sqrt3/7}.
    pub fn nu_seg_at(&self, r: f64, eps: f64) -> Result<MomentValue> {
        let key = EpsKey::segregation(eps)?;
        if key == EpsKey::Sqrt3Over4 && self.corrected() && (1.5..2.0).contains(&r) {
            let (v, _) = eval_table(NU_S_SQRT3_4_PIECE5_FIX, r)?;
            return Ok(MomentValue::variance(v * (r - 2.0).powi(4), 5));
        }
        specific(key.nu_table(), r, key.threshold(), false)
    }

    /// Asymptotic variance under association; closed forms exist only at
    /// eps in {5 sqrt3/24, sqrt3/12, sqrt3/21}.
    pub fn nu_assoc_at(&self, r: f64, eps: f64) -> Result<MomentValue> {
        let key = EpsKey::association(eps)?;
        specific(key.nu_table(), r, key.threshold(), false)
    }
}

fn specific(t: &[Piece], r: f64, threshold: f64, mean: bool) -> Result<MomentValue> {
    check_r(r)?;
    if r >= threshold {
        return Ok(if mean { MomentValue::mean(1.0, 0) } else { MomentValue::variance(0.0, 0) });
    }
    let (v, k) = eval_table(t, r)?;
    Ok(if mean { MomentValue::mean(v, k) } else { MomentValue::variance(v, k) })
}

/// The epsilon values with closed-form alternative variances.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EpsKey {
    Sqrt3Over8,
    Sqrt3Over4,
    TwoSqrt3Over7,
    FiveSqrt3Over24,
    Sqrt3Over12,
    Sqrt3Over21,
}

const KEY_TOL: f64 = 1e-9;
pub const SUPPORTED_SEG: &str = "sqrt3/8, sqrt3/4, 2*sqrt3/7";
pub const SUPPORTED_ASSOC: &str = "5*sqrt3/24, sqrt3/12, sqrt3/21";

impl EpsKey {
    pub const SEGREGATION: [EpsKey; 3] = [EpsKey::Sqrt3Over8, EpsKey::Sqrt3Over4, EpsKey::TwoSqrt3Over7];
    pub const ASSOCIATION: [EpsKey; 3] =
        [EpsKey::FiveSqrt3Over24, EpsKey::Sqrt3Over12, EpsKey::Sqrt3Over21];

    pub fn eps(&self) -> f64 {
        match self {
            EpsKey::Sqrt3Over8 => SQRT3 / 8.0,
            EpsKey::Sqrt3Over4 => SQRT3 / 4.0,
            EpsKey::TwoSqrt3Over7 => 2.0 * SQRT3 / 7.0,
            EpsKey::FiveSqrt3Over24 => 5.0 * SQRT3 / 24.0,
            EpsKey::Sqrt3Over12 => SQRT3 / 12.0,
            EpsKey::Sqrt3Over21 => SQRT3 / 21.0,
        }
    }

    pub fn segregation(eps: f64) -> Result<EpsKey> {
        Self::SEGREGATION
            .into_iter()
            .find(|k| (k.eps() - eps).abs() < KEY_TOL)
            .ok_or(Error::NoClosedForm { eps, supported: SUPPORTED_SEG })
    }

    pub fn association(eps: f64) -> Result<EpsKey> {
        Self::ASSOCIATION
            .into_iter()
            .find(|k| (k.eps() - eps).abs() < KEY_TOL)
            .ok_or(Error::NoClosedForm { eps, supported: SUPPORTED_ASSOC })
    }

    /// r from which the statistic is degenerate (infinite for association).
    pub fn threshold(&self) -> f64 {
        match self {
            EpsKey::Sqrt3Over8 => 4.0,
            EpsKey::Sqrt3Over4 => 2.0,
            EpsKey::TwoSqrt3Over7 => 1.5,
            _ => f64::INFINITY,
        }
    }

    fn mu_table(&self) -> &'static [Piece] {
        match self {
            EpsKey::Sqrt3Over8 => MU_S_SQRT3_8,
            EpsKey::Sqrt3Over4 => MU_S_SQRT3_4,
            EpsKey::TwoSqrt3Over7 => MU_S_2SQRT3_7,
            EpsKey::FiveSqrt3Over24 => MU_A_5SQRT3_24,
            EpsKey::Sqrt3Over12 => MU_A_SQRT3_12,
            EpsKey::Sqrt3Over21 => MU_A_SQRT3_21,
        }
    }

    fn nu_table(&self) -> &'static [Piece] {
        match self {
            EpsKey::Sqrt3Over8 => NU_S_SQRT3_8,
            EpsKey::Sqrt3Over4 => NU_S_SQRT3_4,
            EpsKey::TwoSqrt3Over7 => NU_S_2SQRT3_7,
            EpsKey::FiveSqrt3Over24 => NU_A_5SQRT3_24,
            EpsKey::Sqrt3Over12 => NU_A_SQRT3_12,
            EpsKey::Sqrt3Over21 => NU_A_SQRT3_21,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            EpsKey::Sqrt3Over8 => "sqrt3/8",
            EpsKey::Sqrt3Over4 => "sqrt3/4",
            EpsKey::TwoSqrt3Over7 => "2 sqrt3/7",
            EpsKey::FiveSqrt3Over24 => "5 sqrt3/24",
            EpsKey::Sqrt3Over12 => "sqrt3/12",
            EpsKey::Sqrt3Over21 => "sqrt3/21",
        }
    }

    /// Number of published pieces in the variance table.
    pub fn nu_pieces(&self) -> usize {
        self.nu_table().len()
    }

    pub fn mu_pieces(&self) -> usize {
        self.mu_table().len()
    }

    /// Interval `[lo, hi)` of a 1-based variance piece.
    pub fn nu_interval(&self, piece: usize) -> Option<(f64, f64)> {
        self.nu_table().get(piece.checked_sub(1)?).map(|p| (p.lo, p.hi))
    }

    pub fn mu_interval(&self, piece: usize) -> Option<(f64, f64)> {
        self.mu_table().get(piece.checked_sub(1)?).map(|p| (p.lo, p.hi))
    }
}

/// Segregation mean with the default (verbatim) coefficients.
pub fn mu_seg(r: f64, eps: f64) -> Result<MomentValue> {
    MomentBank::default().mu_seg(r, eps)
}

/// Association mean with the default (verbatim) coefficients.
pub fn mu_assoc(r: f64, eps: f64) -> Result<MomentValue> {
    MomentBank::default().mu_assoc(r, eps)
}

pub fn nu_seg_at(r: f64, eps: f64) -> Result<MomentValue> {
    MomentBank::default().nu_seg_at(r, eps)
}

pub fn nu_assoc_at(r: f64, eps: f64) -> Result<MomentValue> {
    MomentBank::default().nu_assoc_at(r, eps)
}

/// Pieces in r of the general-epsilon mean tables, as `(lo, hi)` at the given eps.
pub fn general_intervals(bank: &MomentBank, seg: bool, eps: f64) -> Result<Vec<(f64, f64)>> {
    check_eps(eps)?;
    if eps == 0.0 {
        return Ok(MU_NULL.iter().map(|p| (p.lo, p.hi)).collect());
    }
    let pieces: &[GPiece] = if seg {
        if eps < SQRT3 / 8.0 {
            &SEG_1
        } else if eps < SQRT3 / 6.0 {
            &SEG_2
        } else if eps < SQRT3 / 5.0 && bank.corrected() {
            &SEG_3A
        } else if eps < SQRT3 / 4.0 {
            &SEG_3
        } else if bank.corrected() {
            &SEG_4
        } else {
            &SEG_4_PRINTED
        }
    } else if eps < assoc_regime_boundary() {
        if bank.corrected() { &ASSOC_1 } else { &ASSOC_1_PRINTED }
    } else if eps < SQRT3 / 12.0 {
        if bank.corrected() { &ASSOC_2 } else { &ASSOC_2_PRINTED }
    } else {
        &ASSOC_3
    };
    Ok(pieces.iter().map(|p| ((p.lo)(eps), (p.hi)(eps))).collect())
}

/// What an audit point evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AuditKind {
    Mean,
    Variance,
}

/// One table piece evaluated at the midpoint of its interval.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditPoint {
    pub table: String,
    /// 1-based piece index within the table.
    pub piece: usize,
    pub kind: AuditKind,
    pub alt: crate::sampling::Alternative,
    pub r: f64,
    pub value: f64,
}

/// Representative eps for each regime of the general mean tables.
fn regime_eps(seg: bool) -> Vec<(String, f64)> {
    let mid = |a: f64, b: f64| 0.5 * (a + b);
    let emax = crate::sampling::EPS_MAX;
    if seg {
        vec![
            ("mu_S regime 1".into(), mid(0.0, SQRT3 / 8.0)),
            ("mu_S regime 2".into(), mid(SQRT3 / 8.0, SQRT3 / 6.0)),
            ("mu_S regime 3, eps < sqrt3/5".into(), mid(SQRT3 / 6.0, SQRT3 / 5.0)),
            ("mu_S regime 3".into(), mid(SQRT3 / 5.0, SQRT3 / 4.0)),
            ("mu_S regime 4".into(), mid(SQRT3 / 4.0, emax)),
        ]
    } else {
        vec![
            ("mu_A regime 1".into(), mid(0.0, assoc_regime_boundary())),
            ("mu_A regime 2".into(), mid(assoc_regime_boundary(), SQRT3 / 12.0)),
            ("mu_A regime 3".into(), mid(SQRT3 / 12.0, emax)),
        ]
    }
}

fn midpoint(lo: f64, hi: f64) -> f64 {
    if hi.is_finite() {
        0.5 * (lo + hi)
    } else {
        lo + 1.0
    }
}

/// Every piece of every alternative table, at the midpoint of its interval.
/// Used to compare the closed forms against Monte Carlo estimates.
pub fn audit_points(bank: &MomentBank) -> Result<Vec<AuditPoint>> {
    use crate::sampling::Alternative;
    let mut out = Vec::new();
    for seg in [true, false] {
        for (name, eps) in regime_eps(seg) {
            let alt = if seg { Alternative::Segregation { eps } } else { Alternative::Association { eps } };
            for (i, (lo, hi)) in general_intervals(bank, seg, eps)?.into_iter().enumerate() {
                if !(lo < hi) {
                    continue;
                }
                let r = midpoint(lo, hi);
                let value = if seg { bank.mu_seg(r, eps)? } else { bank.mu_assoc(r, eps)? }.value;
                out.push(AuditPoint { table: name.clone(), piece: i + 1, kind: AuditKind::Mean, alt, r, value });
            }
        }
    }
    for key in EpsKey::SEGREGATION.into_iter().chain(EpsKey::ASSOCIATION) {
        let seg = EpsKey::SEGREGATION.contains(&key);
        let eps = key.eps();
        let alt = if seg { Alternative::Segregation { eps } } else { Alternative::Association { eps } };
        let label = if seg { "S" } else { "A" };
        for piece in 1..=key.mu_pieces() {
            let (lo, hi) = key.mu_interval(piece).unwrap_or((1.0, 1.0));
            let r = midpoint(lo, hi);
            let value = if seg { bank.mu_seg_at(r, eps)? } else { bank.mu_assoc_at(r, eps)? }.value;
            out.push(AuditPoint { table: format!("mu_{label}({})", key.label()), piece, kind: AuditKind::Mean, alt, r, value });
        }
        for piece in 1..=key.nu_pieces() {
            let (lo, hi) = key.nu_interval(piece).unwrap_or((1.0, 1.0));
            let r = midpoint(lo, hi);
            let value = if seg { bank.nu_seg_at(r, eps)? } else { bank.nu_assoc_at(r, eps)? }.value;
            out.push(AuditPoint { table: format!("nu_{label}({})", key.label()), piece, kind: AuditKind::Variance, alt, r, value });
        }
    }
    Ok(out)
}
