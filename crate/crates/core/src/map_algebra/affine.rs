use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{BiPoly, PolyPair, Rational, UniPoly};

use super::ElementaryMap;

/// `x' = a11·x + a12·y + b1, y' = a21·x + a22·y + b2` with invertible linear
/// part.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineMap {
    a11: Rational,
    a12: Rational,
    a21: Rational,
    a22: Rational,
    b1: Rational,
    b2: Rational,
}

impl AffineMap {
    pub fn new(
        a11: Rational,
        a12: Rational,
        a21: Rational,
        a22: Rational,
        b1: Rational,
        b2: Rational,
    ) -> Result<Self> {
        let m = Self { a11, a12, a21, a22, b1, b2 };
        if m.det().is_zero() {
            return Err(Error::NotInvertible("affine map with singular linear part".into()));
        }
        Ok(m)
    }

    fn raw(a11: Rational, a12: Rational, a21: Rational, a22: Rational, b1: Rational, b2: Rational) -> Self {
        Self { a11, a12, a21, a22, b1, b2 }
    }

    pub fn identity() -> Self {
        Self::raw(
            Rational::one(),
            Rational::zero(),
            Rational::zero(),
            Rational::one(),
            Rational::zero(),
            Rational::zero(),
        )
    }

    /// The swap `t: (x, y) -> (y, x)`.
    pub fn swap() -> Self {
        Self::raw(
            Rational::zero(),
            Rational::one(),
            Rational::one(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        )
    }

    pub fn a11(&self) -> &Rational {
        &self.a11
    }
    pub fn a12(&self) -> &Rational {
        &self.a12
    }
    pub fn a21(&self) -> &Rational {
        &self.a21
    }
    pub fn a22(&self) -> &Rational {
        &self.a22
    }
    pub fn b1(&self) -> &Rational {
        &self.b1
    }
    pub fn b2(&self) -> &Rational {
        &self.b2
    }

    pub fn det(&self) -> Rational {
        &self.a11 * &self.a22 - &self.a12 * &self.a21
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// Triangular maps (`a21 = 0`) are also elementary.
    pub fn in_intersection(&self) -> bool {
        self.a21.is_zero()
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &AffineMap) -> AffineMap {
        let s = self;
        let i = inner;
        Self::raw(
            &s.a11 * &i.a11 + &s.a12 * &i.a21,
            &s.a11 * &i.a12 + &s.a12 * &i.a22,
            &s.a21 * &i.a11 + &s.a22 * &i.a21,
            &s.a21 * &i.a12 + &s.a22 * &i.a22,
            &s.a11 * &i.b1 + &s.a12 * &i.b2 + &s.b1,
            &s.a21 * &i.b1 + &s.a22 * &i.b2 + &s.b2,
        )
    }

    pub fn inverse(&self) -> AffineMap {
        let d = self.det();
        let a11 = &self.a22 / &d;
        let a12 = -&self.a12 / &d;
        let a21 = -&self.a21 / &d;
        let a22 = &self.a11 / &d;
        let b1 = -(&a11 * &self.b1 + &a12 * &self.b2);
        let b2 = -(&a21 * &self.b1 + &a22 * &self.b2);
        Self::raw(a11, a12, a21, a22, b1, b2)
    }

    /// The same map as an elementary letter, when triangular.
    pub fn to_elementary(&self) -> Option<ElementaryMap> {
        if !self.in_intersection() {
            return None;
        }
        let p = UniPoly::linear(self.b1.clone(), self.a12.clone());
        ElementaryMap::new(self.a11.clone(), p, self.a22.clone(), self.b2.clone()).ok()
    }

    pub fn to_poly_pair(&self) -> PolyPair {
        let row = |a: &Rational, b: &Rational, c: &Rational| {
            BiPoly::from_terms([((1, 0), a.clone()), ((0, 1), b.clone()), ((0, 0), c.clone())])
        };
        PolyPair::new(
            row(&self.a11, &self.a12, &self.b1),
            row(&self.a21, &self.a22, &self.b2),
        )
    }

    pub fn apply(&self, x: &Rational, y: &Rational) -> (Rational, Rational) {
        (
            &self.a11 * x + &self.a12 * y + &self.b1,
            &self.a21 * x + &self.a22 * y + &self.b2,
        )
    }

    /// Splits a non-triangular map as `rep ∘ s` with `s` triangular and
    /// `rep = (κx + y, x)` the fixed representative of its coset.
    pub(crate) fn coset_split(&self) -> (AffineMap, AffineMap) {
        debug_assert!(!self.in_intersection());
        let kappa = &self.a11 / &self.a21;
        let rep = Self::raw(
            kappa,
            Rational::one(),
            Rational::one(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        );
        let s = rep.inverse().compose(self);
        (rep, s)
    }
}
