//! Exact checks of the defining relations `S∘L = L∘S` (symmetry) and
//! `R∘L = L⁻¹∘R` (reversing symmetry), by bivariate composition and
//! coefficient comparison.

use crate::map_algebra::{GeneralisedStandardMap, PlanarPolyMap};
use crate::poly::{BiPoly, PolyPair, UniPoly};

/// Iteration stops once the total degree passes this bound.
pub const ORDER_DEGREE_CAP: u32 = 32;

pub fn maps_equal(f: &PlanarPolyMap, g: &PlanarPolyMap) -> bool {
    f.forward() == g.forward()
}

pub fn check_symmetry(s: &PlanarPolyMap, l: &PlanarPolyMap) -> bool {
    s.forward().after(l.forward()) == l.forward().after(s.forward())
}

pub fn check_reversing(r: &PlanarPolyMap, l: &PlanarPolyMap) -> bool {
    r.forward().after(l.forward()) == l.inverse_pair().after(r.forward())
}

/// `F∘(x, y + p(x))`.
fn after_vertical_shear(f: &PolyPair, p: &UniPoly) -> PolyPair {
    let x = BiPoly::x();
    let y = &BiPoly::y() + &x.apply_uni(p);
    PolyPair::new(f.x.compose(&x, &y), f.y.compose(&x, &y))
}

/// `F∘(x + p(y), y)`.
fn after_horizontal_shear(f: &PolyPair, p: &UniPoly) -> PolyPair {
    let y = BiPoly::y();
    let x = &BiPoly::x() + &y.apply_uni(p);
    PolyPair::new(f.x.compose(&x, &y), f.y.compose(&x, &y))
}

/// `(x + p(y), y)∘F`.
fn horizontal_shear_after(p: &UniPoly, f: &PolyPair) -> PolyPair {
    PolyPair::new(&f.x + &f.y.apply_uni(p), f.y.clone())
}

/// `(x, y + p(x))∘F`.
fn vertical_shear_after(p: &UniPoly, f: &PolyPair) -> PolyPair {
    PolyPair::new(f.x.clone(), &f.y + &f.x.apply_uni(p))
}

/// [`check_symmetry`] for `L = E2∘E1` in standard form, with the shears
/// `E1 = (x + p1(y), y)`, `E2 = (x, y + p2(x))` kept apart: `S∘L = L∘S` iff
/// `E2⁻¹∘S∘E2 = E1∘S∘E1⁻¹`. For the shear-like witnesses of the tables
/// this keeps intermediate degrees near `deg p1 · deg p2` instead of its
/// cube. Only the forward map of `S` enters, so a bare candidate pair
/// can be checked without knowing its inverse.
pub fn check_symmetry_standard(f: &PolyPair, l: &GeneralisedStandardMap) -> bool {
    let lhs = vertical_shear_after(&-&l.p2, &after_vertical_shear(f, &l.p2));
    let rhs = horizontal_shear_after(&l.p1, &after_horizontal_shear(f, &-&l.p1));
    lhs == rhs
}

/// [`check_reversing`] for `L = E2∘E1`: `R∘L = L⁻¹∘R` iff
/// `E1∘R∘E2 = E2⁻¹∘R∘E1⁻¹`.
pub fn check_reversing_standard(f: &PolyPair, l: &GeneralisedStandardMap) -> bool {
    let lhs = horizontal_shear_after(&l.p1, &after_vertical_shear(f, &l.p2));
    let rhs = vertical_shear_after(&-&l.p2, &after_horizontal_shear(f, &-&l.p1));
    lhs == rhs
}

/// Least `k <= max_k` with `F^k = id`.
pub fn element_order(f: &PlanarPolyMap, max_k: usize) -> Option<usize> {
    let step = f.forward();
    let mut acc: PolyPair = step.clone();
    for k in 1..=max_k {
        if acc.is_identity() {
            return Some(k);
        }
        if acc.total_degree() > ORDER_DEGREE_CAP {
            return None;
        }
        if k < max_k {
            acc = step.after(&acc);
        }
    }
    None
}
