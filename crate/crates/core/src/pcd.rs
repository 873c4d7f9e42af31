//! Data-random proximity catch digraph and its relative arc density.

use bitvec::prelude::*;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{arc_from_bary, Point, ProximityParams, Triangle};

/// Digraphs up to this many vertices keep a dense bit matrix.
pub const DENSE_LIMIT: usize = 4096;

#[derive(Debug, Clone)]
enum Arcs {
    Dense(BitVec<u64, Lsb0>),
    /// Sorted (source, target) pairs.
    Sparse(Vec<(u32, u32)>),
}

#[derive(Debug, Clone)]
pub struct Digraph {
    n: usize,
    arcs: Arcs,
    arc_count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DensityResult {
    pub rho: f64,
    pub arc_count: usize,
    pub n: usize,
}

impl Digraph {
    /// Build from an arc predicate; rows are evaluated in parallel.
    pub fn from_fn<F>(n: usize, arc: F) -> Digraph
    where
        F: Fn(usize, usize) -> bool + Sync,
    {
        let rows: Vec<Vec<u32>> = (0..n)
            .into_par_iter()
            .map(|i| {
                (0..n)
                    .filter(|&j| j != i && arc(i, j))
                    .map(|j| j as u32)
                    .collect()
            })
            .collect();
        let arc_count = rows.iter().map(Vec::len).sum();
        let arcs = if n <= DENSE_LIMIT {
            let mut bits = bitvec![u64, Lsb0; 0; n * n];
            for (i, row) in rows.iter().enumerate() {
                for &j in row {
                    bits.set(i * n + j as usize, true);
                }
            }
            Arcs::Dense(bits)
        } else {
            Arcs::Sparse(
                rows.iter()
                    .enumerate()
                    .flat_map(|(i, row)| row.iter().map(move |&j| (i as u32, j)))
                    .collect(),
            )
        };
        Digraph { n, arcs, arc_count }
    }

    pub fn empty(n: usize) -> Digraph {
        Digraph::from_fn(n, |_, _| false)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn has_arc(&self, i: usize, j: usize) -> bool {
        if i >= self.n || j >= self.n {
            return false;
        }
        match &self.arcs {
            Arcs::Dense(b) => b[i * self.n + j],
            Arcs::Sparse(v) => v.binary_search(&(i as u32, j as u32)).is_ok(),
        }
    }

    pub fn arcs(&self) -> Vec<(usize, usize)> {
        match &self.arcs {
            Arcs::Dense(b) => b.iter_ones().map(|k| (k / self.n, k % self.n)).collect(),
            Arcs::Sparse(v) => v.iter().map(|&(i, j)| (i as usize, j as usize)).collect(),
        }
    }

    /// Number of arcs between `i` and `j`, in either direction.
    pub fn pair_kernel(&self, i: usize, j: usize) -> Result<u8> {
        if i == j || i >= self.n || j >= self.n {
            return Err(Error::BadPair(i, j));
        }
        Ok(self.has_arc(i, j) as u8 + self.has_arc(j, i) as u8)
    }

    pub fn relative_density(&self) -> Result<DensityResult> {
        relative_density(self)
    }
}

pub fn relative_density(d: &Digraph) -> Result<DensityResult> {
    if d.n < 2 {
        return Err(Error::TooFewPoints(d.n));
    }
    Ok(DensityResult {
        rho: d.arc_count as f64 / (d.n * (d.n - 1)) as f64,
        arc_count: d.arc_count,
        n: d.n,
    })
}

fn barycentrics(tri: &Triangle, points: &[Point]) -> Result<Vec<[f64; 3]>> {
    points
        .iter()
        .enumerate()
        .map(|(index, &p)| {
            if !p.is_finite() || !tri.contains(p) {
                Err(Error::PointOutside { index, point: p })
            } else {
                Ok(tri.barycentric(p))
            }
        })
        .collect()
}

/// Arc (i, j) is present iff `points[j]` lies in the proximity region of
/// `points[i]`.
pub fn build_digraph(tri: &Triangle, params: ProximityParams, points: &[Point]) -> Result<Digraph> {
    let bary = barycentrics(tri, points)?;
    Ok(Digraph::from_fn(points.len(), |i, j| {
        arc_from_bary(&bary[i], &bary[j], params.r)
    }))
}

/// Arc count from precomputed barycentric coordinates, without storing arcs.
/// This is the Monte Carlo hot path.
pub fn count_arcs_bary(bary: &[[f64; 3]], params: ProximityParams) -> usize {
    let mut count = 0;
    for (i, li) in bary.iter().enumerate() {
        for (j, lj) in bary.iter().enumerate() {
            if i != j && arc_from_bary(li, lj, params.r) {
                count += 1;
            }
        }
    }
    count
}

/// Relative arc density of the points in one triangle.
pub fn density(tri: &Triangle, params: ProximityParams, points: &[Point]) -> Result<DensityResult> {
    let bary = barycentrics(tri, points)?;
    let n = bary.len();
    if n < 2 {
        return Err(Error::TooFewPoints(n));
    }
    let arc_count = count_arcs_bary(&bary, params);
    Ok(DensityResult {
        rho: arc_count as f64 / (n * (n - 1)) as f64,
        arc_count,
        n,
    })
}
