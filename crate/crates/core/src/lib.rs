//! r-factor proximity catch digraphs (PCDs) and the relative arc density
//! test for segregation and association of one point pattern relative to a
//! fixed reference pattern.
//!
//! Module map:
//! - [`geometry`]: triangles, vertex regions, proximity regions.
//! - [`pcd`]: digraph construction and relative arc density.
//! - [`sampling`]: seeded null and alternative point generators.
//! - [`moments`]: closed-form null and alternative moments.
//! - [`efficacy`]: Pitman and Hodges-Lehmann efficacies, asymptotic power.
//! - [`multitriangle`]: Delaunay mesh and multi-triangle moments.
//! - [`inference`]: the asymptotic test and the Monte Carlo engine.

// Negated comparisons are how NaN gets rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod efficacy;
pub mod error;
pub mod geometry;
pub mod inference;
pub mod moments;
pub mod multitriangle;
pub mod normal;
pub mod pcd;
pub mod sampling;

pub use error::{Error, Result};
pub use geometry::{AffineMap, Point, Polygon, ProximityParams, RFactor, Triangle};
pub use inference::{McConfig, McResult, TestReport};
pub use moments::{MomentValue, Transcription};
pub use multitriangle::{DelaunayMesh, MultiDensity};
pub use pcd::{DensityResult, Digraph};
pub use sampling::Alternative;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
