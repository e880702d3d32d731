use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{BiPoly, PolyPair};

/// A polynomial automorphism of the plane together with its polynomial
/// inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PlanarPolyMap {
    forward: PolyPair,
    inverse: PolyPair,
}

impl PlanarPolyMap {
    /// Checks both compositions and the Jacobian before accepting.
    pub fn new(forward: PolyPair, inverse: PolyPair) -> Result<Self> {
        if !forward.after(&inverse).is_identity() || !inverse.after(&forward).is_identity() {
            return Err(Error::NotInvertible("given inverse does not invert the map".into()));
        }
        let jac = forward.jacobian_determinant();
        match jac.as_constant() {
            Some(c) if c != num_traits::Zero::zero() => Ok(Self { forward, inverse }),
            _ => Err(Error::NotInvertible("Jacobian is not a nonzero constant".into())),
        }
    }

    /// For maps whose inverse is correct by construction.
    pub(crate) fn from_parts_unchecked(forward: PolyPair, inverse: PolyPair) -> Self {
        Self { forward, inverse }
    }

    pub fn identity() -> Self {
        Self::from_parts_unchecked(PolyPair::identity(), PolyPair::identity())
    }

    pub fn forward(&self) -> &PolyPair {
        &self.forward
    }

    pub fn inverse_pair(&self) -> &PolyPair {
        &self.inverse
    }

    pub fn inverse(&self) -> PlanarPolyMap {
        Self::from_parts_unchecked(self.inverse.clone(), self.forward.clone())
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &PlanarPolyMap) -> PlanarPolyMap {
        Self::from_parts_unchecked(
            self.forward.after(&inner.forward),
            inner.inverse.after(&self.inverse),
        )
    }

    pub fn is_identity(&self) -> bool {
        self.forward.is_identity()
    }

    pub fn jacobian(&self) -> BiPoly {
        self.forward.jacobian_determinant()
    }

    pub fn total_degree(&self) -> u32 {
        self.forward.total_degree()
    }

    pub fn apply_f64(&self, x: f64, y: f64) -> (f64, f64) {
        self.forward.eval_f64(x, y)
    }
}

impl fmt::Display for PlanarPolyMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.forward.fmt(f)
    }
}
