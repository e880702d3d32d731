use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{int, rational_string, rational_to_f64, BiPoly, PolyPair, Rational, UniPoly};

/// Fixed-point set of an involution, as a curve parametrised by one real.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FixCurve {
    /// `x = x0`, parametrised by `y`.
    VerticalLine { x0: Rational },
    /// `y = y0`, parametrised by `x`.
    HorizontalLine { y0: Rational },
    /// `y = g(x)`, parametrised by `x`.
    GraphOverX { g: UniPoly },
    /// `x = h(y)`, parametrised by `y`.
    GraphOverY { h: UniPoly },
    /// `y = x + offset`, parametrised by `x`.
    Diagonal { offset: Rational },
    /// `y = -x + offset`, parametrised by `x`.
    AntiDiagonal { offset: Rational },
}

impl FixCurve {
    /// Point of the curve at parameter `s`, with any polynomial converted
    /// to floating point once.
    pub fn sampler(&self) -> impl Fn(f64) -> (f64, f64) + Sync + Send + '_ {
        let (kind, coeffs): (u8, Vec<f64>) = match self {
            Self::VerticalLine { x0 } => (0, vec![rational_to_f64(x0)]),
            Self::HorizontalLine { y0 } => (1, vec![rational_to_f64(y0)]),
            Self::GraphOverX { g } => (1, g.to_f64_coeffs()),
            Self::GraphOverY { h } => (0, h.to_f64_coeffs()),
            Self::Diagonal { offset } => (1, vec![rational_to_f64(offset), 1.0]),
            Self::AntiDiagonal { offset } => (1, vec![rational_to_f64(offset), -1.0]),
        };
        move |s| {
            let v = coeffs.iter().rev().fold(0.0, |acc, a| acc * s + a);
            if kind == 0 {
                (v, s)
            } else {
                (s, v)
            }
        }
    }

    /// Name of the parameter along the curve.
    pub fn parameter(&self) -> &'static str {
        match self {
            Self::VerticalLine { .. } | Self::GraphOverY { .. } => "y",
            _ => "x",
        }
    }
}

impl fmt::Display for FixCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::VerticalLine { x0 } => write!(f, "x = {}", rational_string(x0)),
            Self::HorizontalLine { y0 } => write!(f, "y = {}", rational_string(y0)),
            Self::GraphOverX { g } => write!(f, "y = {}", g.display_in("x")),
            Self::GraphOverY { h } => write!(f, "x = {}", h.display_in("y")),
            Self::Diagonal { offset } if offset.is_zero() => f.write_str("y = x"),
            Self::Diagonal { offset } => write!(f, "y = x + {}", rational_string(offset)),
            Self::AntiDiagonal { offset } => write!(f, "y = -x + {}", rational_string(offset)),
        }
    }
}

fn half(p: &UniPoly) -> UniPoly {
    p.scale(&Rational::new(1.into(), 2.into()))
}

fn line_over_x(g: UniPoly) -> FixCurve {
    match g.degree() {
        None | Some(0) => FixCurve::HorizontalLine { y0: g.coeff(0) },
        Some(1) if g.coeff(1).is_one() => FixCurve::Diagonal { offset: g.coeff(0) },
        Some(1) if g.coeff(1) == -Rational::one() => FixCurve::AntiDiagonal { offset: g.coeff(0) },
        _ => FixCurve::GraphOverX { g },
    }
}

fn line_over_y(h: UniPoly) -> FixCurve {
    match h.degree() {
        None | Some(0) => FixCurve::VerticalLine { x0: h.coeff(0) },
        // x = y + b  <=>  y = x - b
        Some(1) if h.coeff(1).is_one() => FixCurve::Diagonal { offset: -h.coeff(0) },
        Some(1) if h.coeff(1) == -Rational::one() => FixCurve::AntiDiagonal { offset: h.coeff(0) },
        _ => FixCurve::GraphOverY { h },
    }
}

/// Fixed set of the involution `r`, for the shapes that occur among the
/// explicit reversing symmetries: a reflection in one coordinate sheared
/// by the other, or an affine swap of the coordinates.
pub fn fix_curve(r: &PolyPair) -> Result<FixCurve> {
    if !r.after(r).is_identity() {
        return Err(Error::NoFixedSet("map is not an involution".into()));
    }
    let (f, g) = (&r.x, &r.y);
    let x = BiPoly::x();
    let y = BiPoly::y();

    // (x, -y + h(x)): fixed where y = h(x)/2.
    if *f == x {
        if let Some(h) = (g + &y).as_uni_x() {
            return Ok(line_over_x(half(&h)));
        }
    }
    // (-x + h(y), y)
    if *g == y {
        if let Some(h) = (f + &x).as_uni_y() {
            return Ok(line_over_y(half(&h)));
        }
    }
    // (x + h(y), -y + e) with h(e/2) = 0: the line y = e/2.
    if let (Some(e), Some(h)) = ((g + &y).as_constant(), (f - &x).as_uni_y()) {
        let y0 = &e / int(2);
        if h.eval(&y0).is_zero() {
            return Ok(FixCurve::HorizontalLine { y0 });
        }
    }
    // (-x + e, y + h(x)) with h(e/2) = 0: the line x = e/2.
    if let (Some(e), Some(h)) = ((f + &x).as_constant(), (g - &y).as_uni_x()) {
        let x0 = &e / int(2);
        if h.eval(&x0).is_zero() {
            return Ok(FixCurve::VerticalLine { x0 });
        }
    }
    // (a·y + b, x/a + d): the line x = a·y + b.
    if let Some(h) = f.as_uni_y() {
        if h.degree() == Some(1) && g.as_uni_x().is_some_and(|k| k.degree() == Some(1)) {
            return Ok(line_over_y(h));
        }
    }
    Err(Error::NoFixedSet(format!("unrecognised involution {r}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn pair(f: BiPoly, g: BiPoly) -> PolyPair {
        PolyPair::new(f, g)
    }

    #[test]
    fn henon_reversor_fixes_a_parabola() {
        // (x, -y + 2x - 2x^2)
        let g = &BiPoly::from_uni_x(&UniPoly::from_ints(&[0, 2, -2])) - &BiPoly::y();
        let c = fix_curve(&pair(BiPoly::x(), g)).unwrap();
        assert_eq!(c, FixCurve::GraphOverX { g: UniPoly::from_ints(&[0, 1, -1]) });
        let at = c.sampler();
        assert_eq!(at(1.0), (1.0, 0.0));
    }

    #[test]
    fn swap_fixes_the_diagonal() {
        let c = fix_curve(&pair(BiPoly::y(), BiPoly::x())).unwrap();
        assert_eq!(c, FixCurve::Diagonal { offset: int(0) });
        assert_eq!(c.to_string(), "y = x");
    }

    #[test]
    fn anti_swap_fixes_the_antidiagonal() {
        // (-y + 3, -x + 3)
        let f = &BiPoly::constant(int(3)) - &BiPoly::y();
        let g = &BiPoly::constant(int(3)) - &BiPoly::x();
        let c = fix_curve(&pair(f, g)).unwrap();
        assert_eq!(c, FixCurve::AntiDiagonal { offset: int(3) });
    }

    #[test]
    fn reflection_sheared_by_y_is_a_graph_over_y() {
        // (-x - y^3, y): x = -y^3/2
        let f = &(-&BiPoly::x()) - &BiPoly::from_uni_y(&UniPoly::from_ints(&[0, 0, 0, 1]));
        let c = fix_curve(&pair(f, BiPoly::y())).unwrap();
        assert_eq!(
            c,
            FixCurve::GraphOverY { h: UniPoly::from_coeffs(vec![int(0), int(0), int(0), rat(-1, 2)]) }
        );
        assert_eq!(c.parameter(), "y");
    }

    #[test]
    fn shear_with_reflected_y_fixes_a_horizontal_line() {
        // (x + (y-1)^3, -y + 2)
        let h = UniPoly::from_ints(&[-1, 3, -3, 1]);
        let f = &BiPoly::x() + &BiPoly::from_uni_y(&h);
        let g = &BiPoly::constant(int(2)) - &BiPoly::y();
        let c = fix_curve(&pair(f, g)).unwrap();
        assert_eq!(c, FixCurve::HorizontalLine { y0: int(1) });
    }

    #[test]
    fn point_reflection_has_no_fixed_curve() {
        let f = -&BiPoly::x();
        let g = -&BiPoly::y();
        assert!(matches!(fix_curve(&pair(f, g)), Err(Error::NoFixedSet(_))));
    }

    #[test]
    fn non_involution_is_rejected() {
        let f = &BiPoly::x() + &BiPoly::y();
        assert!(matches!(fix_curve(&pair(f, BiPoly::y())), Err(Error::NoFixedSet(_))));
    }
}
