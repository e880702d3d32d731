use crate::map_algebra::GeneralisedStandardMap;
use crate::poly::{PolyPair, UniPoly};

fn horner(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, a| acc * x + a)
}

fn derivative(c: &[f64]) -> Vec<f64> {
    c.iter().enumerate().skip(1).map(|(k, a)| k as f64 * a).collect()
}

/// Floating-point copy of a generalised standard map.
#[derive(Debug, Clone, PartialEq)]
pub struct NumericMap {
    p1: Vec<f64>,
    p2: Vec<f64>,
    dp1: Vec<f64>,
    dp2: Vec<f64>,
}

impl NumericMap {
    pub fn new(l: &GeneralisedStandardMap) -> Self {
        Self::from_polys(&l.p1, &l.p2)
    }

    pub fn from_polys(p1: &UniPoly, p2: &UniPoly) -> Self {
        let p1 = p1.to_f64_coeffs();
        let p2 = p2.to_f64_coeffs();
        Self {
            dp1: derivative(&p1),
            dp2: derivative(&p2),
            p1,
            p2,
        }
    }

    pub fn forward(&self, (x, y): (f64, f64)) -> (f64, f64) {
        let x1 = x + horner(&self.p1, y);
        (x1, y + horner(&self.p2, x1))
    }

    pub fn backward(&self, (x1, y1): (f64, f64)) -> (f64, f64) {
        let y = y1 - horner(&self.p2, x1);
        (x1 - horner(&self.p1, y), y)
    }

    /// Jacobian determinant of `forward` at `z`, from the exact derivative
    /// of each shear.
    pub fn jacobian_det(&self, (x, y): (f64, f64)) -> f64 {
        let a = horner(&self.dp1, y);
        let b = horner(&self.dp2, x + horner(&self.p1, y));
        let (j11, j12, j21, j22) = (1.0, a, b, 1.0 + a * b);
        j11 * j22 - j12 * j21
    }

    /// `L^n(z)`, or `None` once an iterate stops being finite.
    pub fn power(&self, mut z: (f64, f64), n: usize) -> Option<(f64, f64)> {
        for _ in 0..n {
            z = self.forward(z);
            if !finite(z) {
                return None;
            }
        }
        Some(z)
    }
}

pub(crate) fn finite(z: (f64, f64)) -> bool {
    z.0.is_finite() && z.1.is_finite()
}

/// A polynomial map of the plane evaluated in floating point.
#[derive(Debug, Clone, PartialEq)]
pub struct NumericPair {
    x: Vec<(i32, i32, f64)>,
    y: Vec<(i32, i32, f64)>,
}

impl NumericPair {
    pub fn new(f: &PolyPair) -> Self {
        let conv = |p: &crate::poly::BiPoly| {
            p.terms()
                .map(|(&(i, j), c)| (i as i32, j as i32, crate::poly::rational_to_f64(c)))
                .collect()
        };
        Self {
            x: conv(&f.x),
            y: conv(&f.y),
        }
    }

    pub fn apply(&self, (x, y): (f64, f64)) -> (f64, f64) {
        let ev = |t: &[(i32, i32, f64)]| t.iter().map(|(i, j, c)| c * x.powi(*i) * y.powi(*j)).sum();
        (ev(&self.x), ev(&self.y))
    }
}

/// Points of the forward orbit of `start`.
#[derive(Debug, Clone, PartialEq)]
pub struct Orbit {
    pub points: Vec<(f64, f64)>,
    /// Set when an iterate overflowed; `points` stops before it.
    pub truncated: bool,
}

pub fn iterate(l: &NumericMap, start: (f64, f64), n: usize) -> Orbit {
    walk(start, n, |z| l.forward(z))
}

pub fn iterate_backward(l: &NumericMap, start: (f64, f64), n: usize) -> Orbit {
    walk(start, n, |z| l.backward(z))
}

fn walk(start: (f64, f64), n: usize, step: impl Fn((f64, f64)) -> (f64, f64)) -> Orbit {
    let mut points = Vec::with_capacity(n + 1);
    points.push(start);
    let mut z = start;
    for _ in 0..n {
        z = step(z);
        if !finite(z) {
            return Orbit {
                points,
                truncated: true,
            };
        }
        points.push(z);
    }
    Orbit {
        points,
        truncated: false,
    }
}

/// Largest `|R(L(z)) - L⁻¹(R(z))|` over the points of `orbit`.
pub fn reversing_defect(l: &NumericMap, r: &NumericPair, orbit: &[(f64, f64)]) -> f64 {
    orbit
        .iter()
        .map(|&z| {
            let a = r.apply(l.forward(z));
            let b = l.backward(r.apply(z));
            (a.0 - b.0).hypot(a.1 - b.1)
        })
        .fold(0.0, f64::max)
}
