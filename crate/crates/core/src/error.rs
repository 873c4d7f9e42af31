use crate::geometry::Point;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("collinear vertices")]
    Collinear,
    #[error("non-finite coordinate")]
    NonFinite,
    #[error("point outside triangle: ({}, {})", .0.x, .0.y)]
    OutsideTriangle(Point),
    #[error("point {index} outside triangle: ({}, {})", .point.x, .point.y)]
    PointOutside { index: usize, point: Point },
    #[error("point {index} outside the convex hull: ({}, {})", .point.x, .point.y)]
    OutsideHull { index: usize, point: Point },
    #[error("expansion factor r must be >= 1, got {0}")]
    InvalidR(f64),
    #[error("density undefined for n < 2 (n = {0})")]
    TooFewPoints(usize),
    #[error("pair kernel needs distinct indices below n, got ({0}, {1})")]
    BadPair(usize, usize),
    #[error("epsilon {0} outside the admissible range")]
    InvalidEpsilon(f64),
    #[error("delta {0} outside (0, 4/9)")]
    InvalidDelta(f64),
    #[error("no closed form at epsilon {eps}; supported values: {supported}; use Monte Carlo")]
    NoClosedForm { eps: f64, supported: &'static str },
    #[error("tabulated variance is negative at r = {r} ({value}); the corrected transcription avoids this")]
    NegativeVariance { r: f64, value: f64 },
    #[error("variance is zero (degenerate statistic)")]
    Degenerate,
    #[error("invalid weights: {0}")]
    InvalidWeights(String),
    #[error("need at least 3 non-collinear sites, got {0}")]
    TooFewSites(usize),
    #[error("empty mesh")]
    EmptyMesh,
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
