//! Exact polynomial arithmetic over the rationals.
//!
//! [`UniPoly`] carries the one-variable data of a map (the two shear
//! functions and every condition derived from them); [`BiPoly`] carries the
//! explicit components of planar maps used for exact verification.

mod bi;
mod parity;
mod uni;

pub use bi::{BiPoly, PolyPair};
pub use parity::{parity_center, shifted_monomial, Parity, ParityWitness, ShiftedMonomial};
pub use uni::UniPoly;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// `n/d` as a [`Rational`]. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Serializes a rational as `num/den`, or just `num` for integers.
pub fn rational_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Huge numerators/denominators: scale through the ratio of bit lengths.
        let n = r.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = r.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

/// All rational `v` with `v^d = r` (at most two).
pub fn rational_roots(r: &Rational, d: u32) -> Vec<Rational> {
    assert!(d >= 1, "root index must be positive");
    if r.is_zero() {
        return vec![Rational::zero()];
    }
    if d == 1 {
        return vec![r.clone()];
    }
    let even = d.is_multiple_of(2);
    if even && r.is_negative() {
        return Vec::new();
    }
    let num = r.numer().abs();
    let den = r.denom().clone();
    let num_root = num.nth_root(d);
    let den_root = den.nth_root(d);
    if num_root.pow(d) != num || den_root.pow(d) != den {
        return Vec::new();
    }
    let root = Rational::new(num_root, den_root);
    if even {
        vec![root.clone(), -root]
    } else if r.is_negative() {
        vec![-root]
    } else {
        vec![root]
    }
}

pub(crate) fn rational_pow(base: &Rational, exp: i32) -> Rational {
    if exp >= 0 {
        num_traits::pow(base.clone(), exp as usize)
    } else {
        num_traits::pow(base.recip(), (-exp) as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_roots_cover_signs_and_parity() {
        assert_eq!(rational_roots(&rat(8, 27), 3), vec![rat(2, 3)]);
        assert_eq!(rational_roots(&rat(-8, 27), 3), vec![rat(-2, 3)]);
        assert_eq!(rational_roots(&rat(1, 16), 4), vec![rat(1, 2), rat(-1, 2)]);
        assert!(rational_roots(&rat(-1, 16), 4).is_empty());
        assert!(rational_roots(&int(2), 2).is_empty());
        assert!(rational_roots(&rat(2, 9), 2).is_empty());
    }

    #[test]
    fn rational_strings_are_exact() {
        assert_eq!(rational_string(&rat(6, -4)), "-3/2");
        assert_eq!(rational_string(&int(7)), "7");
    }
}
