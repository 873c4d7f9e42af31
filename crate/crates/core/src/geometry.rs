//! Planar triangle primitives, vertex regions, r-factor proximity regions and
//! the inverse (Gamma-1) membership relation.
//!
//! Two routes compute the same regions. [`proximity_region`] builds the
//! polygon explicitly by half-plane clipping in Cartesian coordinates, while
//! [`arc_from_bary`] decides membership directly from barycentric
//! coordinates. The digraph and Monte Carlo code use the barycentric route;
//! the polygon route is kept as a reference and for export.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance used by every inclusive boundary test.
pub const CONTAIN_TOL: f64 = 1e-12;

pub const SQRT3: f64 = 1.732_050_807_568_877_2;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }

    fn lerp(self, o: Point, t: f64) -> Point {
        Point::new(self.x + t * (o.x - self.x), self.y + t * (o.y - self.y))
    }

    fn mid(self, o: Point) -> Point {
        self.lerp(o, 0.5)
    }
}

fn cross(a: Point, b: Point) -> f64 {
    a.x * b.y - a.y * b.x
}

/// A non-degenerate triangle with cached derived quantities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Triangle {
    pub vertices: [Point; 3],
    pub area: f64,
    pub center_of_mass: Point,
    /// `edge_midpoints[j]` is the midpoint of the edge opposite vertex `j`.
    pub edge_midpoints: [Point; 3],
    /// Twice the signed area; cached for barycentric coordinates.
    signed2: f64,
}

impl Triangle {
    pub fn new(a: Point, b: Point, c: Point) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(Error::NonFinite);
        }
        let signed2 = cross(b.sub(a), c.sub(a));
        let scale = [a, b, c]
            .iter()
            .map(|p| p.x.abs().max(p.y.abs()))
            .fold(1.0_f64, f64::max);
        if signed2.abs() <= 1e-14 * scale * scale {
            return Err(Error::Collinear);
        }
        Ok(Triangle {
            vertices: [a, b, c],
            area: 0.5 * signed2.abs(),
            center_of_mass: Point::new((a.x + b.x + c.x) / 3.0, (a.y + b.y + c.y) / 3.0),
            edge_midpoints: [b.mid(c), a.mid(c), a.mid(b)],
            signed2,
        })
    }

    /// The equilateral triangle with vertices (0,0), (1,0), (1/2, sqrt3/2).
    pub fn standard() -> Self {
        Triangle::new(
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(0.5, SQRT3 / 2.0),
        )
        .expect("standard triangle is non-degenerate")
    }

    pub fn barycentric(&self, p: Point) -> [f64; 3] {
        let [a, b, c] = self.vertices;
        let l2 = cross(p.sub(a), c.sub(a)) / self.signed2;
        let l3 = cross(b.sub(a), p.sub(a)) / self.signed2;
        [1.0 - l2 - l3, l2, l3]
    }

    pub fn from_barycentric(&self, l: [f64; 3]) -> Point {
        let [a, b, c] = self.vertices;
        Point::new(
            l[0] * a.x + l[1] * b.x + l[2] * c.x,
            l[0] * a.y + l[1] * b.y + l[2] * c.y,
        )
    }

    pub fn contains(&self, p: Point) -> bool {
        self.barycentric(p).iter().all(|&l| l >= -CONTAIN_TOL)
    }

    /// The triangle as a counter-clockwise polygon.
    pub fn to_polygon(&self) -> Polygon {
        let mut v = self.vertices.to_vec();
        if self.signed2 < 0.0 {
            v.reverse();
        }
        Polygon { vertices: v }
    }

    /// Height from vertex `j` onto the opposite edge.
    pub fn height(&self, j: usize) -> f64 {
        let a = self.vertices[(j + 1) % 3];
        let b = self.vertices[(j + 2) % 3];
        2.0 * self.area / b.sub(a).x.hypot(b.sub(a).y)
    }
}

/// Expansion factor r of the proximity map, with infinity kept explicit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RFactor {
    Finite(f64),
    Infinite,
}

impl RFactor {
    pub fn new(r: f64) -> Result<Self> {
        if r.is_nan() || r < 1.0 {
            return Err(Error::InvalidR(r));
        }
        Ok(if r.is_infinite() {
            RFactor::Infinite
        } else {
            RFactor::Finite(r)
        })
    }

    pub fn value(&self) -> f64 {
        match *self {
            RFactor::Finite(r) => r,
            RFactor::Infinite => f64::INFINITY,
        }
    }
}

impl std::fmt::Display for RFactor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RFactor::Finite(r) => write!(f, "{r}"),
            RFactor::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProximityParams {
    pub r: RFactor,
}

impl ProximityParams {
    pub fn new(r: f64) -> Result<Self> {
        Ok(ProximityParams { r: RFactor::new(r)? })
    }

    pub fn infinite() -> Self {
        ProximityParams { r: RFactor::Infinite }
    }
}

/// Affine map `p -> A p + t` with cached inverse.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AffineMap {
    pub linear: [[f64; 2]; 2],
    pub translation: [f64; 2],
    inv_linear: [[f64; 2]; 2],
}

impl AffineMap {
    pub fn new(linear: [[f64; 2]; 2], translation: [f64; 2]) -> Result<Self> {
        let det = linear[0][0] * linear[1][1] - linear[0][1] * linear[1][0];
        if !det.is_finite() || det.abs() < 1e-300 {
            return Err(Error::Collinear);
        }
        let inv_linear = [
            [linear[1][1] / det, -linear[0][1] / det],
            [-linear[1][0] / det, linear[0][0] / det],
        ];
        Ok(AffineMap {
            linear,
            translation,
            inv_linear,
        })
    }

    pub fn determinant(&self) -> f64 {
        self.linear[0][0] * self.linear[1][1] - self.linear[0][1] * self.linear[1][0]
    }

    pub fn apply(&self, p: Point) -> Point {
        let m = &self.linear;
        Point::new(
            m[0][0] * p.x + m[0][1] * p.y + self.translation[0],
            m[1][0] * p.x + m[1][1] * p.y + self.translation[1],
        )
    }

    pub fn apply_inverse(&self, p: Point) -> Point {
        let m = &self.inv_linear;
        let q = Point::new(p.x - self.translation[0], p.y - self.translation[1]);
        Point::new(m[0][0] * q.x + m[0][1] * q.y, m[1][0] * q.x + m[1][1] * q.y)
    }
}

/// Affine map taking `tri`'s vertices, in order, onto the standard
/// equilateral triangle.
pub fn standardize(tri: &Triangle) -> Result<AffineMap> {
    let [a, b, c] = tri.vertices;
    let std = Triangle::standard();
    let [_, sb, sc] = std.vertices;
    // Columns of the source and target edge matrices.
    let (e1, e2) = (b.sub(a), c.sub(a));
    let det = e1.x * e2.y - e2.x * e1.y;
    if det.abs() < 1e-300 {
        return Err(Error::Collinear);
    }
    let inv = [[e2.y / det, -e2.x / det], [-e1.y / det, e1.x / det]];
    let tgt = [[sb.x, sc.x], [sb.y, sc.y]];
    let mut lin = [[0.0; 2]; 2];
    for (i, row) in lin.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = tgt[i][0] * inv[0][j] + tgt[i][1] * inv[1][j];
        }
    }
    let t = [
        -(lin[0][0] * a.x + lin[0][1] * a.y),
        -(lin[1][0] * a.x + lin[1][1] * a.y),
    ];
    AffineMap::new(lin, t)
}

/// Index of the largest barycentric coordinate, lowest index on ties.
pub fn vertex_from_bary(l: &[f64; 3]) -> usize {
    let mut v = 0;
    for j in 1..3 {
        if l[j] > l[v] {
            v = j;
        }
    }
    v
}

/// Vertex region containing `x`: region j is bounded by the segments from
/// the center of mass to the midpoints of the two edges meeting at vertex j.
pub fn vertex_region(tri: &Triangle, x: Point) -> Result<usize> {
    if !tri.contains(x) {
        return Err(Error::OutsideTriangle(x));
    }
    Ok(vertex_from_bary(&tri.barycentric(x)))
}

/// Arc test in barycentric coordinates: is `z` in the proximity region of `x`?
///
/// The region of `x` is the set of triangle points whose distance from the
/// line through the region vertex v, measured towards the opposite edge, is at
/// most r times that of `x`. In barycentric terms `1 - l_v(z) <= r (1 - l_v(x))`.
#[inline]
pub fn arc_from_bary(lx: &[f64; 3], lz: &[f64; 3], r: RFactor) -> bool {
    match r {
        RFactor::Infinite => true,
        RFactor::Finite(r) => {
            let v = vertex_from_bary(lx);
            1.0 - lz[v] <= r * (1.0 - lx[v]) + CONTAIN_TOL
        }
    }
}

/// Ordered vertex list of a convex polygon (counter-clockwise).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Polygon {
    pub vertices: Vec<Point>,
}

impl Polygon {
    pub fn area(&self) -> f64 {
        let v = &self.vertices;
        if v.len() < 3 {
            return 0.0;
        }
        let mut s = 0.0;
        for i in 0..v.len() {
            s += cross(v[i], v[(i + 1) % v.len()]);
        }
        0.5 * s.abs()
    }

    /// Keep the part where `n . p >= c` (Sutherland-Hodgman on one edge).
    pub fn clip_halfplane(&self, n: Point, c: f64) -> Polygon {
        let v = &self.vertices;
        let mut out = Vec::with_capacity(v.len() + 1);
        for i in 0..v.len() {
            let p = v[i];
            let q = v[(i + 1) % v.len()];
            let fp = n.x * p.x + n.y * p.y - c;
            let fq = n.x * q.x + n.y * q.y - c;
            if fp >= 0.0 {
                out.push(p);
            }
            if (fp >= 0.0) != (fq >= 0.0) {
                out.push(p.lerp(q, fp / (fp - fq)));
            }
        }
        Polygon { vertices: out }
    }
}

/// Point in convex polygon, inclusive with [`CONTAIN_TOL`]. A single-vertex
/// polygon contains only that point.
pub fn contains(region: &Polygon, p: Point) -> bool {
    let v = &region.vertices;
    match v.len() {
        0 => false,
        1 => (v[0].x - p.x).abs() <= CONTAIN_TOL && (v[0].y - p.y).abs() <= CONTAIN_TOL,
        _ => {
            for i in 0..v.len() {
                let a = v[i];
                let b = v[(i + 1) % v.len()];
                let e = b.sub(a);
                let len = e.x.hypot(e.y);
                if len == 0.0 {
                    continue;
                }
                // Signed distance of p to the edge line, positive inside.
                if cross(e, p.sub(a)) / len < -CONTAIN_TOL {
                    return false;
                }
            }
            true
        }
    }
}

/// The proximity region of `x`: the triangle similar to `tri`, anchored at the
/// vertex whose region holds `x`, scaled by r, and clipped to `tri`.
pub fn proximity_region(tri: &Triangle, params: ProximityParams, x: Point) -> Result<Polygon> {
    let v = vertex_region(tri, x)?;
    let r = match params.r {
        RFactor::Infinite => return Ok(tri.to_polygon()),
        RFactor::Finite(r) => r,
    };
    let y = tri.vertices[v];
    if x.sub(y).x.abs() <= CONTAIN_TOL && x.sub(y).y.abs() <= CONTAIN_TOL {
        return Ok(Polygon { vertices: vec![x] });
    }
    // Unit normal of the opposite edge, pointing towards y.
    let a = tri.vertices[(v + 1) % 3];
    let b = tri.vertices[(v + 2) % 3];
    let e = b.sub(a);
    let len = e.x.hypot(e.y);
    let mut n = Point::new(-e.y / len, e.x / len);
    if n.x * (y.x - a.x) + n.y * (y.y - a.y) < 0.0 {
        n = Point::new(-n.x, -n.y);
    }
    let dot = |p: Point| n.x * p.x + n.y * p.y;
    // Distance from y to the line through x parallel to the opposite edge,
    // scaled by r; keep points no farther than that from y.
    let dy = dot(y);
    let reach = r * (dy - dot(x));
    let poly = tri.to_polygon();
    if reach >= dy - dot(a) {
        return Ok(poly);
    }
    Ok(poly.clip_halfplane(n, dy - reach))
}

/// Membership of `x` in the Gamma-1 region of `z`, i.e. `x` lies in the
/// proximity region of `z`.
pub fn gamma1_contains(tri: &Triangle, params: ProximityParams, x: Point, z: Point) -> Result<bool> {
    if !tri.contains(x) {
        return Err(Error::OutsideTriangle(x));
    }
    if !tri.contains(z) {
        return Err(Error::OutsideTriangle(z));
    }
    Ok(arc_from_bary(
        &tri.barycentric(z),
        &tri.barycentric(x),
        params.r,
    ))
}
