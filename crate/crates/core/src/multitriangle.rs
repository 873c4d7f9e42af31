//! Delaunay triangulation of the reference pattern and the multi-triangle
//! relative density, conditional on the triangle weights.
//!
//! Triangulation is incremental Bowyer-Watson inside a large super-triangle.
//! A site exactly on a circumcircle counts as outside, which acts as a fixed
//! perturbation: among cocircular configurations the edges created first
//! survive, so the output depends only on the input order of the sites.
//! Slivers next to the hull that the super-triangle misses are filled
//! afterwards and repaired with edge flips.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Point, ProximityParams, Triangle, CONTAIN_TOL};
use crate::moments;
use crate::pcd;

/// Tolerance on the sum of the weights.
pub const WEIGHT_TOL: f64 = 1e-9;

/// Sums of squared and cubed triangle weights.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightSums {
    pub squares: f64,
    pub cubes: f64,
}

impl WeightSums {
    pub fn new(w: &[f64]) -> Result<Self> {
        if w.is_empty() {
            return Err(Error::InvalidWeights("no weights".into()));
        }
        if let Some(x) = w.iter().find(|x| !(x.is_finite() && **x > 0.0)) {
            return Err(Error::InvalidWeights(format!("weight {x} is not positive")));
        }
        let s: f64 = w.iter().sum();
        if (s - 1.0).abs() > WEIGHT_TOL {
            return Err(Error::InvalidWeights(format!("weights sum to {s}, not 1")));
        }
        Ok(WeightSums {
            squares: w.iter().map(|x| x * x).sum(),
            cubes: w.iter().map(|x| x * x * x).sum(),
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(try_from = "MeshFile", into = "MeshFile")]
pub struct DelaunayMesh {
    pub sites: Vec<Point>,
    /// Counter-clockwise vertex triples, smallest index first, sorted.
    pub triangles: Vec<[usize; 3]>,
    /// `area(T_j) / area(hull)`.
    pub weights: Vec<f64>,
    geoms: Vec<Triangle>,
}

#[derive(Serialize, Deserialize)]
struct MeshFile {
    sites: Vec<Point>,
    triangles: Vec<[usize; 3]>,
    weights: Vec<f64>,
}

impl TryFrom<MeshFile> for DelaunayMesh {
    type Error = Error;
    fn try_from(f: MeshFile) -> Result<Self> {
        let mesh = DelaunayMesh::from_parts(f.sites, f.triangles)?;
        if mesh.weights.len() != f.weights.len()
            || mesh.weights.iter().zip(&f.weights).any(|(a, b)| (a - b).abs() > 1e-9)
        {
            return Err(Error::InvalidWeights("stored weights disagree with triangle areas".into()));
        }
        Ok(mesh)
    }
}

impl From<DelaunayMesh> for MeshFile {
    fn from(m: DelaunayMesh) -> Self {
        MeshFile { sites: m.sites, triangles: m.triangles, weights: m.weights }
    }
}

fn coord(p: Point) -> robust::Coord<f64> {
    robust::Coord { x: p.x, y: p.y }
}

/// Twice the signed area of `abc`, with an exact sign.
fn orient(a: Point, b: Point, c: Point) -> f64 {
    robust::orient2d(coord(a), coord(b), coord(c))
}

/// Positive when `d` is strictly inside the circumcircle of the
/// counter-clockwise triangle `abc`; the sign is exact.
fn in_circle(a: Point, b: Point, c: Point, d: Point) -> f64 {
    robust::incircle(coord(a), coord(b), coord(c), coord(d))
}

fn in_circle_tol(a: Point, b: Point, c: Point, d: Point) -> f64 {
    let m = [a, b, c, d]
        .iter()
        .map(|p| (p.x - d.x).abs().max((p.y - d.y).abs()))
        .fold(0.0_f64, f64::max);
    1e-12 * m.powi(4)
}

/// Convex hull area by the monotone chain.
fn hull_area(pts: &[Point]) -> f64 {
    let mut p: Vec<Point> = pts.to_vec();
    p.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    p.dedup();
    if p.len() < 3 {
        return 0.0;
    }
    let mut h: Vec<Point> = Vec::with_capacity(2 * p.len());
    for pass in 0..2 {
        let start = h.len();
        let iter: Box<dyn Iterator<Item = &Point>> =
            if pass == 0 { Box::new(p.iter()) } else { Box::new(p.iter().rev()) };
        for &q in iter {
            while h.len() >= start + 2 && orient(h[h.len() - 2], h[h.len() - 1], q) <= 0.0 {
                h.pop();
            }
            h.push(q);
        }
        h.pop();
    }
    let n = h.len();
    0.5 * (0..n).map(|i| h[i].x * h[(i + 1) % n].y - h[(i + 1) % n].x * h[i].y).sum::<f64>()
}

/// Directed boundary edges of a set of counter-clockwise triangles, as a
/// successor map `a -> b`.
fn boundary(tris: &[[usize; 3]]) -> HashMap<usize, usize> {
    let edges: HashSet<(usize, usize)> = tris.iter().flat_map(|t| (0..3).map(move |k| (t[k], t[(k + 1) % 3]))).collect();
    edges.iter().filter(|&&(a, b)| !edges.contains(&(b, a))).copied().collect()
}

/// Adds ears over reflex boundary vertices until the boundary is convex.
fn fill_pockets(pts: &[Point], tris: &mut Vec<[usize; 3]>) {
    let mut next = boundary(tris);
    if next.len() != boundary_len(&next) {
        return;
    }
    loop {
        let mut added = false;
        let mut starts: Vec<usize> = next.keys().copied().collect();
        starts.sort_unstable();
        for a in starts {
            let Some(&b) = next.get(&a) else { continue };
            let Some(&c) = next.get(&b) else { continue };
            if a == c || orient(pts[a], pts[b], pts[c]) >= 0.0 {
                continue;
            }
            let (pa, pb, pc) = (pts[a], pts[c], pts[b]);
            let blocked = next.keys().any(|&v| {
                v != a && v != b && v != c && orient(pa, pb, pts[v]) >= 0.0 && orient(pb, pc, pts[v]) >= 0.0 && orient(pc, pa, pts[v]) >= 0.0
            });
            if blocked {
                continue;
            }
            tris.push([a, c, b]);
            next.remove(&b);
            next.insert(a, c);
            added = true;
        }
        if !added {
            break;
        }
    }
}

fn boundary_len(next: &HashMap<usize, usize>) -> usize {
    let Some(&start) = next.keys().next() else { return 0 };
    let (mut v, mut n) = (start, 0);
    loop {
        match next.get(&v) {
            Some(&w) => {
                v = w;
                n += 1;
            }
            None => return usize::MAX,
        }
        if v == start || n > next.len() {
            return n;
        }
    }
}

/// Flips edges that violate the empty-circumcircle property.
fn lawson_flips(pts: &[Point], tris: &mut [[usize; 3]]) {
    let mut owner: HashMap<(usize, usize), usize> = HashMap::new();
    for (i, t) in tris.iter().enumerate() {
        for k in 0..3 {
            owner.insert((t[k], t[(k + 1) % 3]), i);
        }
    }
    let mut stack: Vec<(usize, usize)> = owner.keys().copied().filter(|&(a, b)| a < b).collect();
    stack.sort_unstable_by(|x, y| y.cmp(x));
    // Exact predicates make every flip strictly improve, so this terminates.
    while let Some((a, b)) = stack.pop() {
        let (Some(&i), Some(&j)) = (owner.get(&(a, b)), owner.get(&(b, a))) else { continue };
        let c = third(tris[i], a, b);
        let d = third(tris[j], b, a);
        let (pa, pb, pc, pd) = (pts[a], pts[b], pts[c], pts[d]);
        if in_circle(pa, pb, pc, pd) <= 0.0 {
            continue;
        }
        // abc and bad become adc and dbc.
        for (u, v) in [(a, b), (b, c), (c, a), (b, a), (a, d), (d, b)] {
            owner.remove(&(u, v));
        }
        tris[i] = [a, d, c];
        tris[j] = [d, b, c];
        for (t, idx) in [(tris[i], i), (tris[j], j)] {
            for k in 0..3 {
                owner.insert((t[k], t[(k + 1) % 3]), idx);
            }
        }
        stack.extend([(a, d), (d, b), (b, c), (c, a)]);
    }
}

/// Vertex of the counter-clockwise triangle `t` following the directed edge `a -> b`.
fn third(t: [usize; 3], a: usize, b: usize) -> usize {
    let k = (0..3).find(|&k| t[k] == a && t[(k + 1) % 3] == b).expect("edge belongs to triangle");
    t[(k + 2) % 3]
}

impl DelaunayMesh {
    /// Delaunay triangulation of the sites.
    pub fn triangulate(sites: &[Point]) -> Result<DelaunayMesh> {
        if sites.len() < 3 {
            return Err(Error::TooFewSites(sites.len()));
        }
        if sites.iter().any(|p| !p.is_finite()) {
            return Err(Error::NonFinite);
        }
        let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
        for p in sites {
            x0 = x0.min(p.x);
            y0 = y0.min(p.y);
            x1 = x1.max(p.x);
            y1 = y1.max(p.y);
        }
        let span = (x1 - x0).max(y1 - y0).max(f64::MIN_POSITIVE);
        let (cx, cy) = (0.5 * (x0 + x1), 0.5 * (y0 + y1));
        let big = 1e4 * span;
        let m = sites.len();
        let mut pts = sites.to_vec();
        pts.push(Point::new(cx - big, cy - big));
        pts.push(Point::new(cx + big, cy - big));
        pts.push(Point::new(cx, cy + big));
        let mut tris: Vec<[usize; 3]> = vec![[m, m + 1, m + 2]];

        for i in 0..m {
            let d = pts[i];
            if pts[..i].contains(&d) {
                continue;
            }
            let (bad, good): (Vec<[usize; 3]>, Vec<[usize; 3]>) = tris.into_iter().partition(|t| {
                let (a, b, c) = (pts[t[0]], pts[t[1]], pts[t[2]]);
                in_circle(a, b, c, d) > 0.0
            });
            tris = good;
            // Cavity boundary: edges of bad triangles not shared by another bad one.
            let mut edges: Vec<(usize, usize)> = Vec::new();
            for t in &bad {
                for k in 0..3 {
                    edges.push((t[k], t[(k + 1) % 3]));
                }
            }
            for &(a, b) in &edges {
                if !edges.contains(&(b, a)) {
                    tris.push([a, b, i]);
                }
            }
        }
        tris.retain(|t| t.iter().all(|&v| v < m));
        let mut tris: Vec<[usize; 3]> = tris
            .into_iter()
            .filter(|t| orient(pts[t[0]], pts[t[1]], pts[t[2]]).abs() > 0.0)
            .collect();
        if tris.is_empty() {
            return Err(Error::TooFewSites(m));
        }
        // A finite super-triangle can leave slivers of the hull uncovered.
        fill_pockets(sites, &mut tris);
        lawson_flips(sites, &mut tris);
        let mesh = DelaunayMesh::from_parts(sites.to_vec(), tris)?;
        let total: f64 = mesh.geoms.iter().map(|t| t.area).sum();
        let hull = hull_area(sites);
        if (total - hull).abs() > 1e-9 * hull.max(1.0) {
            return Err(Error::Config(format!(
                "triangulation covers area {total} of hull area {hull}; near-collinear hull sites"
            )));
        }
        Ok(mesh)
    }

    /// Mesh from sites and triangles; weights are recomputed from areas.
    pub fn from_parts(sites: Vec<Point>, triangles: Vec<[usize; 3]>) -> Result<DelaunayMesh> {
        if triangles.is_empty() {
            return Err(Error::EmptyMesh);
        }
        let mut tris = Vec::with_capacity(triangles.len());
        for t in triangles {
            if t.iter().any(|&v| v >= sites.len()) {
                return Err(Error::Config(format!("triangle {t:?} references a missing site")));
            }
            let mut t = t;
            if orient(sites[t[0]], sites[t[1]], sites[t[2]]) < 0.0 {
                t.swap(1, 2);
            }
            let k = (0..3).min_by_key(|&k| t[k]).unwrap_or(0);
            tris.push([t[k], t[(k + 1) % 3], t[(k + 2) % 3]]);
        }
        tris.sort_unstable();
        tris.dedup();
        let geoms = tris
            .iter()
            .map(|t| Triangle::new(sites[t[0]], sites[t[1]], sites[t[2]]))
            .collect::<Result<Vec<_>>>()?;
        let total: f64 = geoms.iter().map(|g| g.area).sum();
        let weights = geoms.iter().map(|g| g.area / total).collect();
        Ok(DelaunayMesh { sites, triangles: tris, weights, geoms })
    }

    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    pub fn triangle_geometries(&self) -> &[Triangle] {
        &self.geoms
    }

    pub fn hull_area(&self) -> f64 {
        self.geoms.iter().map(|g| g.area).sum()
    }

    /// Lowest-index triangle containing `p`.
    pub fn locate(&self, p: Point) -> Option<usize> {
        self.geoms.iter().position(|g| g.contains(p))
    }

    /// Largest violation of the empty-circumcircle property, relative to the
    /// squared circumradius scale; at most tolerance level for a valid mesh.
    pub fn max_circumcircle_violation(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for t in &self.triangles {
            let (a, b, c) = (self.sites[t[0]], self.sites[t[1]], self.sites[t[2]]);
            for (i, &d) in self.sites.iter().enumerate() {
                if t.contains(&i) {
                    continue;
                }
                let v = in_circle(a, b, c, d) / in_circle_tol(a, b, c, d).max(f64::MIN_POSITIVE) * 1e-12;
                worst = worst.max(v);
            }
        }
        worst
    }
}

/// Multi-triangle relative densities of one point set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MultiDensity {
    /// Total arcs over n(n - 1).
    pub rho_j: f64,
    /// `(n_j, arcs_j, rho_{n_j})` per triangle; `rho` is 0 when `n_j < 2`.
    pub per_triangle: Vec<(usize, usize, f64)>,
    /// Total arcs over the attainable maximum, when that is positive.
    pub adjusted: Option<f64>,
    /// `sum_j w_j^2 rho_{n_j}`.
    pub u_stat: f64,
    pub arc_count: usize,
    pub n: usize,
}

/// Assign points to triangles; points on shared edges go to the lowest index.
pub fn assign_points(mesh: &DelaunayMesh, points: &[Point]) -> Result<Vec<usize>> {
    points
        .iter()
        .enumerate()
        .map(|(index, &p)| {
            if !p.is_finite() {
                return Err(Error::OutsideHull { index, point: p });
            }
            mesh.locate(p).ok_or(Error::OutsideHull { index, point: p })
        })
        .collect()
}

/// Per-triangle digraphs, with no arcs between triangles.
pub fn density_multi(mesh: &DelaunayMesh, params: ProximityParams, points: &[Point]) -> Result<MultiDensity> {
    let n = points.len();
    if n < 2 {
        return Err(Error::TooFewPoints(n));
    }
    let owner = assign_points(mesh, points)?;
    let mut groups: Vec<Vec<[f64; 3]>> = vec![Vec::new(); mesh.len()];
    for (p, &j) in points.iter().zip(&owner) {
        let l = mesh.geoms[j].barycentric(*p).map(|x| x.clamp(0.0, 1.0));
        groups[j].push(l);
    }
    let per_triangle: Vec<(usize, usize, f64)> = groups
        .par_iter()
        .map(|g| {
            let nj = g.len();
            let arcs = pcd::count_arcs_bary(g, params);
            let rho = if nj >= 2 { arcs as f64 / (nj * (nj - 1)) as f64 } else { 0.0 };
            (nj, arcs, rho)
        })
        .collect();
    let arc_count: usize = per_triangle.iter().map(|t| t.1).sum();
    let nt: usize = per_triangle.iter().map(|t| t.0 * t.0.saturating_sub(1)).sum();
    let u_stat = per_triangle.iter().zip(&mesh.weights).map(|(t, w)| w * w * t.2).sum();
    Ok(MultiDensity {
        rho_j: arc_count as f64 / (n * (n - 1)) as f64,
        per_triangle,
        adjusted: (nt > 0).then(|| arc_count as f64 / nt as f64),
        u_stat,
        arc_count,
        n,
    })
}

/// `mu(r, J) = mu(r) sum w^2` and
/// `nu(r, J) = nu(r) sum w^3 + 4 mu(r)^2 (sum w^3 - (sum w^2)^2)`.
pub fn moments_multi(r: f64, weights: &[f64]) -> Result<(f64, f64)> {
    let s = WeightSums::new(weights)?;
    let mu = moments::mu_null(r)?.value;
    let nu = moments::nu_null(r)?.value;
    Ok((mu * s.squares, nu * s.cubes + 4.0 * mu * mu * (s.cubes - s.squares * s.squares)))
}

/// Asymptotic variance of the adjusted density at sample size n.
pub fn adjusted_variance(r: f64, weights: &[f64], n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::TooFewPoints(n));
    }
    let s = WeightSums::new(weights)?;
    let mu = moments::mu_null(r)?.value;
    let nu = moments::nu_null(r)?.value;
    let k = s.cubes / (s.squares * s.squares);
    Ok((nu * k + 4.0 * mu * mu * (k - 1.0)).max(0.0) / n as f64)
}

/// Whether the tolerance-inclusive containment test places `p` in triangle `j`.
pub fn in_triangle(mesh: &DelaunayMesh, j: usize, p: Point) -> bool {
    mesh.geoms.get(j).is_some_and(|g| g.barycentric(p).iter().all(|&l| l >= -CONTAIN_TOL))
}
