use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{BiPoly, PolyPair, Rational, UniPoly};

use super::AffineMap;

/// `x' = α·x + p(y), y' = β·y + γ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ElementaryMap {
    alpha: Rational,
    p: UniPoly,
    beta: Rational,
    gamma: Rational,
}

impl ElementaryMap {
    pub fn new(alpha: Rational, p: UniPoly, beta: Rational, gamma: Rational) -> Result<Self> {
        if alpha.is_zero() || beta.is_zero() {
            return Err(Error::NotInvertible("elementary map with zero scale".into()));
        }
        Ok(Self { alpha, p, beta, gamma })
    }

    /// The shear `x' = x + p(y), y' = y`.
    pub fn shear(p: UniPoly) -> Self {
        Self {
            alpha: Rational::one(),
            p,
            beta: Rational::one(),
            gamma: Rational::zero(),
        }
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }
    pub fn p(&self) -> &UniPoly {
        &self.p
    }
    pub fn beta(&self) -> &Rational {
        &self.beta
    }
    pub fn gamma(&self) -> &Rational {
        &self.gamma
    }

    pub fn is_identity(&self) -> bool {
        self.alpha.is_one() && self.p.is_zero() && self.beta.is_one() && self.gamma.is_zero()
    }

    /// Elementary maps with `deg p <= 1` are affine.
    pub fn in_intersection(&self) -> bool {
        self.p.degree().is_none_or(|d| d <= 1)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &ElementaryMap) -> ElementaryMap {
        // x'' = α(α'x + p'(y)) + p(β'y + γ'), y'' = β(β'y + γ') + γ
        let shifted = self
            .p
            .affine_substitute(&inner.beta, &inner.gamma)
            .expect("beta is nonzero");
        Self {
            alpha: &self.alpha * &inner.alpha,
            p: &inner.p.scale(&self.alpha) + &shifted,
            beta: &self.beta * &inner.beta,
            gamma: &self.beta * &inner.gamma + &self.gamma,
        }
    }

    pub fn inverse(&self) -> ElementaryMap {
        let inv_a = self.alpha.recip();
        let inv_b = self.beta.recip();
        let shift = -&self.gamma * &inv_b;
        let p = self
            .p
            .affine_substitute(&inv_b, &shift)
            .expect("beta is nonzero")
            .scale(&-&inv_a);
        Self {
            alpha: inv_a,
            p,
            beta: inv_b,
            gamma: shift,
        }
    }

    pub fn to_affine(&self) -> Option<AffineMap> {
        if !self.in_intersection() {
            return None;
        }
        AffineMap::new(
            self.alpha.clone(),
            self.p.coeff(1),
            Rational::zero(),
            self.beta.clone(),
            self.p.coeff(0),
            self.gamma.clone(),
        )
        .ok()
    }

    pub fn to_poly_pair(&self) -> PolyPair {
        let x = &BiPoly::term(self.alpha.clone(), 1, 0) + &BiPoly::from_uni_y(&self.p);
        let y = BiPoly::from_terms([((0, 1), self.beta.clone()), ((0, 0), self.gamma.clone())]);
        PolyPair::new(x, y)
    }

    /// Splits a non-affine map as `rep ∘ s` with `s` affine and
    /// `rep = (x + p̂(y), y)`, where `p̂` has no terms of degree below two.
    pub(crate) fn coset_split(&self) -> (ElementaryMap, ElementaryMap) {
        debug_assert!(!self.in_intersection());
        // p(y) = a·y + b + p̂(β·y + γ)
        let inv_b = self.beta.recip();
        let moved = self
            .p
            .affine_substitute(&inv_b, &(-&self.gamma * &inv_b))
            .expect("beta is nonzero");
        let mut coeffs = moved.coeffs().to_vec();
        for c in coeffs.iter_mut().take(2) {
            *c = Rational::zero();
        }
        let rep = Self::shear(UniPoly::from_coeffs(coeffs));
        let s = rep.inverse().compose(self);
        (rep, s)
    }
}
