use crate::geometry::SQRT3;

/// Ratio of two polynomials in r, coefficients in descending powers.
#[derive(Debug)]
pub(crate) struct Ratio {
    pub num: &'static [f64],
    pub den: &'static [f64],
}

/// One piece of a univariate table, valid on `[lo, hi)`.
#[derive(Debug)]
pub(crate) struct Piece {
    pub lo: f64,
    pub hi: f64,
    pub f: Ratio,
}

/// `c * sqrt3^s * r^i * eps^j`.
#[derive(Debug)]
pub(crate) struct Term(pub f64, pub u8, pub i32, pub i32);

#[derive(Debug)]
pub(crate) struct Ratio2 {
    pub num: &'static [Term],
    pub den: &'static [Term],
}

fn horner(c: &[f64], x: f64) -> f64 {
    c.iter().fold(0.0, |acc, &a| acc * x + a)
}

impl Ratio {
    pub fn eval(&self, r: f64) -> f64 {
        horner(self.num, r) / horner(self.den, r)
    }
}

fn sum_terms(t: &[Term], r: f64, e: f64) -> f64 {
    t.iter()
        .map(|&Term(c, s, i, j)| {
            let k = if s == 1 { c * SQRT3 } else { c };
            k * r.powi(i) * e.powi(j)
        })
        .sum()
}

impl Ratio2 {
    pub fn eval(&self, r: f64, e: f64) -> f64 {
        sum_terms(self.num, r, e) / sum_terms(self.den, r, e)
    }
}

/// Index of the first piece with `lo <= r < hi`.
pub(crate) fn locate(pieces: &[Piece], r: f64) -> Option<usize> {
    pieces.iter().position(|p| p.lo <= r && r < p.hi)
}
