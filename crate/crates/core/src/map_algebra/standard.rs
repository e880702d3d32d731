use std::fmt;

use num_traits::{One, Zero};

use super::{AffineMap, ElementaryMap, GroupWord, Letter, PlanarPolyMap};
use crate::error::{Error, Result};
use crate::poly::{int, BiPoly, PolyPair, Rational, UniPoly};

/// `x' = x + p1(y), y' = y + p2(x')`.
///
/// Both polynomials are stored in a single formal variable; `p2` is applied
/// to the new `x'`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneralisedStandardMap {
    pub p1: UniPoly,
    pub p2: UniPoly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WordType {
    /// `t · e2 · t · e1`, both shears nonlinear.
    TypeI,
    /// `t · e2 · q1`, `p1` affine.
    TypeII,
    /// `r2 · e1`, `p2` of degree one.
    TypeIII,
    /// A single elementary letter, `p2` constant.
    TypeIV,
}

impl fmt::Display for WordType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::TypeI => "TypeI",
            Self::TypeII => "TypeII",
            Self::TypeIII => "TypeIII",
            Self::TypeIV => "TypeIV",
        })
    }
}

/// The literal factorisation of a standard map, with letter names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardWord {
    pub word_type: WordType,
    pub word: GroupWord,
    pub labels: Vec<&'static str>,
}

impl fmt::Display for StandardWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.word_type, self.labels.join(" · "))
    }
}

/// `x -> αx + β, y -> γy + δ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiagonalAffine {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    pub delta: Rational,
}

impl DiagonalAffine {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational, delta: Rational) -> Result<Self> {
        if alpha.is_zero() || gamma.is_zero() {
            return Err(Error::SingularChange);
        }
        Ok(Self { alpha, beta, gamma, delta })
    }

    pub fn identity() -> Self {
        Self {
            alpha: Rational::one(),
            beta: Rational::zero(),
            gamma: Rational::one(),
            delta: Rational::zero(),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn to_affine(&self) -> AffineMap {
        AffineMap::new(
            self.alpha.clone(),
            Rational::zero(),
            Rational::zero(),
            self.gamma.clone(),
            self.beta.clone(),
            self.delta.clone(),
        )
        .expect("nonzero diagonal")
    }

    pub fn to_planar(&self) -> PlanarPolyMap {
        let a = self.to_affine();
        PlanarPolyMap::from_parts_unchecked(a.to_poly_pair(), a.inverse().to_poly_pair())
    }
}

impl GeneralisedStandardMap {
    pub fn new(p1: UniPoly, p2: UniPoly) -> Self {
        Self { p1, p2 }
    }

    /// The McMillan map `x' = y, y' = -x + f(y)` is conjugate under
    /// `(x, y) -> (x, x - y)` to the standard map with `p1 = -y`,
    /// `p2 = 2x - f(x)`.
    pub fn from_mcmillan(f: &UniPoly) -> Self {
        let p1 = UniPoly::from_ints(&[0, -1]);
        let p2 = &UniPoly::from_ints(&[0, 2]) - f;
        Self { p1, p2 }
    }

    /// `L ∘ inner`, applying the two shears in turn instead of
    /// substituting into the expanded components of `L`.
    pub fn after_pair(&self, inner: &PolyPair) -> PolyPair {
        let x = &inner.x + &inner.y.apply_uni(&self.p1);
        let y = &inner.y + &x.apply_uni(&self.p2);
        PolyPair::new(x, y)
    }

    pub fn degrees(&self) -> (Option<usize>, Option<usize>) {
        (self.p1.degree(), self.p2.degree())
    }

    pub fn forward_pair(&self) -> PolyPair {
        let x = &BiPoly::x() + &BiPoly::from_uni_y(&self.p1);
        let y = &BiPoly::y() + &x.apply_uni(&self.p2);
        PolyPair::new(x, y)
    }

    /// `x' = x - p1(y'), y' = y - p2(x)`.
    pub fn inverse_pair(&self) -> PolyPair {
        let y = &BiPoly::y() - &BiPoly::from_uni_x(&self.p2);
        let x = &BiPoly::x() - &y.apply_uni(&self.p1);
        PolyPair::new(x, y)
    }

    pub fn to_planar(&self) -> PlanarPolyMap {
        PlanarPolyMap::from_parts_unchecked(self.forward_pair(), self.inverse_pair())
    }

    pub fn inverse_planar(&self) -> PlanarPolyMap {
        self.to_planar().inverse()
    }

    pub fn word_type(&self) -> Result<WordType> {
        let d1 = self.p1.degree().unwrap_or(0);
        let d2 = self.p2.degree().unwrap_or(0);
        match (d1, d2) {
            (a, b) if a >= 2 && b >= 2 => Ok(WordType::TypeI),
            (a, b) if a <= 1 && b >= 2 => Ok(WordType::TypeII),
            (a, 1) if a >= 2 => Ok(WordType::TypeIII),
            (a, 0) if a >= 2 => Ok(WordType::TypeIV),
            _ => Err(Error::AffineMap),
        }
    }

    /// The factorisation into affine and elementary letters.
    pub fn word_of_standard_form(&self) -> Result<StandardWord> {
        let word_type = self.word_type()?;
        let t = Letter::Affine(AffineMap::swap());
        let e1 = ElementaryMap::shear(self.p1.clone());
        let e2 = ElementaryMap::shear(self.p2.clone());
        let (letters, labels) = match word_type {
            WordType::TypeI => (
                vec![t.clone(), Letter::Elementary(e2), t, Letter::Elementary(e1)],
                vec!["t", "e2", "t", "e1"],
            ),
            WordType::TypeII => {
                // q1 = t ∘ e1 = (y, x + p1(y))
                let q1 = AffineMap::new(
                    Rational::zero(),
                    Rational::one(),
                    Rational::one(),
                    self.p1.coeff(1),
                    Rational::zero(),
                    self.p1.coeff(0),
                )
                .expect("q1 is invertible");
                (
                    vec![t, Letter::Elementary(e2), Letter::Affine(q1)],
                    vec!["t", "e2", "q1"],
                )
            }
            WordType::TypeIII => {
                // r2 = t ∘ e2 ∘ t = (x, y + p2(x))
                let r2 = AffineMap::new(
                    Rational::one(),
                    Rational::zero(),
                    self.p2.coeff(1),
                    Rational::one(),
                    Rational::zero(),
                    self.p2.coeff(0),
                )
                .expect("r2 is invertible");
                (vec![Letter::Affine(r2), Letter::Elementary(e1)], vec!["r2", "e1"])
            }
            WordType::TypeIV => {
                let e = ElementaryMap::new(int(1), self.p1.clone(), int(1), self.p2.coeff(0))
                    .expect("unit scales");
                (vec![Letter::Elementary(e)], vec!["e"])
            }
        };
        Ok(StandardWord {
            word_type,
            word: GroupWord::new(letters),
            labels,
        })
    }

    /// `T ∘ L ∘ T⁻¹`, again a standard map with
    /// `p1 -> α·p1((y - δ)/γ)` and `p2 -> γ·p2((x - β)/α)`.
    pub fn conjugate_by_affine(&self, t: &DiagonalAffine) -> Result<Self> {
        if t.alpha.is_zero() || t.gamma.is_zero() {
            return Err(Error::SingularChange);
        }
        let inv_g = t.gamma.recip();
        let inv_a = t.alpha.recip();
        let p1 = self
            .p1
            .affine_substitute(&inv_g, &(-&t.delta * &inv_g))?
            .scale(&t.alpha);
        let p2 = self
            .p2
            .affine_substitute(&inv_a, &(-&t.beta * &inv_a))?
            .scale(&t.gamma);
        Ok(Self { p1, p2 })
    }

    /// Canonical text, accepted back by the map-file parser.
    pub fn to_source(&self) -> String {
        format!("p1 = {}; p2 = {}", self.p1.display_in("y"), self.p2.display_in("x"))
    }
}

impl fmt::Display for GeneralisedStandardMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_source())
    }
}

/// The McMillan map `x' = y, y' = -x + f(y)` with its inverse.
pub fn mcmillan_map(f: &UniPoly) -> PlanarPolyMap {
    let forward = PolyPair::new(BiPoly::y(), &BiPoly::from_uni_y(f) - &BiPoly::x());
    let inverse = PolyPair::new(&BiPoly::from_uni_x(f) - &BiPoly::y(), BiPoly::x());
    PlanarPolyMap::from_parts_unchecked(forward, inverse)
}
