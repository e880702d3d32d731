use num_traits::{One, Zero};

use super::{Rational, UniPoly};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Odd,
    Even,
}

/// `p` is odd (`p(m+x) = -p(m-x)`) or even (`p(m+x) = p(m-x)`) around `center`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityWitness {
    pub kind: Parity,
    pub center: Rational,
}

/// `p(x) = coeff * (x - center)^degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedMonomial {
    pub coeff: Rational,
    pub center: Rational,
    pub degree: usize,
}

/// The only point a polynomial of degree `n >= 1` can be symmetric about:
/// the root of its `(n-1)`-th derivative, `-c_{n-1} / (n c_n)`.
pub(crate) fn candidate_center(p: &UniPoly) -> Option<Rational> {
    let n = p.degree()?;
    if n == 0 {
        return None;
    }
    let lead = p.leading()?;
    let n_rat = Rational::from_integer((n as i64).into());
    Some(-p.coeff(n - 1) / (n_rat * lead))
}

/// Finds the unique center about which `p` has the requested parity.
pub fn parity_center(p: &UniPoly, kind: Parity) -> Result<Option<ParityWitness>> {
    let center = candidate_center(p).ok_or(Error::ParityOfConstant)?;
    let shifted = p.affine_substitute(&Rational::one(), &center)?;
    // Odd keeps only odd powers of (x - m); even only even powers.
    let forbidden = match kind {
        Parity::Odd => 0,
        Parity::Even => 1,
    };
    let ok = shifted
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(k, _)| k % 2 == forbidden)
        .all(|(_, c)| c.is_zero());
    Ok(ok.then_some(ParityWitness { kind, center }))
}

pub fn shifted_monomial(p: &UniPoly) -> Result<Option<ShiftedMonomial>> {
    let center = candidate_center(p).ok_or(Error::ConstantPolynomial("shifted monomial test"))?;
    let shifted = p.affine_substitute(&Rational::one(), &center)?;
    let degree = shifted.degree().expect("non-constant");
    let only_top = shifted.coeffs()[..degree].iter().all(Zero::is_zero);
    Ok(only_top.then(|| ShiftedMonomial {
        coeff: shifted.coeffs()[degree].clone(),
        center,
        degree,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat};
    use proptest::prelude::*;

    /// Coefficients of `p(m + x)` by the binomial theorem, independent of
    /// `affine_substitute`.
    fn taylor_at(p: &UniPoly, m: &Rational) -> Vec<Rational> {
        let n = p.coeffs().len();
        let mut out = vec![Rational::zero(); n];
        for (k, c) in p.coeffs().iter().enumerate() {
            let mut binom = Rational::one();
            for j in 0..=k {
                // c * C(k, j) * m^(k-j) * x^j
                let mut term = c * &binom;
                for _ in 0..(k - j) {
                    term *= m;
                }
                out[j] += term;
                binom = binom * Rational::from_integer(((k - j) as i64).into())
                    / Rational::from_integer(((j + 1) as i64).into());
            }
        }
        out
    }

    fn brute_parity(p: &UniPoly, kind: Parity) -> Option<Rational> {
        // Every center the generator can produce has a denominator dividing
        // 120 and lies well inside [-20, 20]. A cheap float screen picks
        // candidates, the exact Taylor expansion confirms them.
        let cf = p.to_f64_coeffs();
        let ev = |x: f64| cf.iter().rev().fold(0.0, |acc, c| acc * x + c);
        let sign = match kind {
            Parity::Odd => -1.0,
            Parity::Even => 1.0,
        };
        let mut hits = Vec::new();
        for n in -2400..=2400 {
            let mf = n as f64 / 120.0;
            let close = [0.37, 1.3, 2.1].iter().all(|t| {
                let (a, b) = (ev(mf + t), sign * ev(mf - t));
                (a - b).abs() <= 1e-6 * (1.0 + a.abs() + b.abs())
            });
            if !close {
                continue;
            }
            let m = rat(n, 120);
            let t = taylor_at(p, &m);
            let sym = t.iter().enumerate().all(|(k, c)| match kind {
                Parity::Odd => k % 2 == 1 || c.is_zero(),
                Parity::Even => k % 2 == 0 || c.is_zero(),
            });
            if sym {
                hits.push(m);
            }
        }
        assert!(hits.len() <= 1, "parity center must be unique: {hits:?}");
        hits.pop()
    }

    #[test]
    fn odd_polynomial_centered_at_zero() {
        let p = UniPoly::from_ints(&[0, 1, 0, 1]);
        let w = parity_center(&p, Parity::Odd).unwrap().unwrap();
        assert_eq!(w.center, int(0));
    }

    #[test]
    fn completed_square_gives_even_center() {
        // 2x - 2x^2 = -2(x - 1/2)^2 + 1/2
        let p = UniPoly::from_ints(&[0, 2, -2]);
        let w = parity_center(&p, Parity::Even).unwrap().unwrap();
        assert_eq!(w.center, rat(1, 2));
        assert!(parity_center(&p, Parity::Odd).unwrap().is_none());
    }

    #[test]
    fn mixed_cubic_has_no_parity() {
        let p = UniPoly::from_ints(&[0, 0, 1, 1]);
        assert!(parity_center(&p, Parity::Odd).unwrap().is_none());
        assert!(parity_center(&p, Parity::Even).unwrap().is_none());
    }

    #[test]
    fn constants_have_no_parity() {
        assert_eq!(
            parity_center(&UniPoly::from_ints(&[5]), Parity::Odd),
            Err(Error::ParityOfConstant)
        );
        assert_eq!(
            parity_center(&UniPoly::zero(), Parity::Even),
            Err(Error::ParityOfConstant)
        );
    }

    #[test]
    fn shifted_monomial_examples() {
        let sq = shifted_monomial(&UniPoly::from_ints(&[0, 0, 1])).unwrap().unwrap();
        assert_eq!((sq.coeff, sq.center, sq.degree), (int(1), int(0), 2));

        // 3(x - 1/2)^3 = 3x^3 - 9/2 x^2 + 9/4 x - 3/8
        let p = UniPoly::from_coeffs(vec![rat(-3, 8), rat(9, 4), rat(-9, 2), int(3)]);
        let sm = shifted_monomial(&p).unwrap().unwrap();
        assert_eq!((sm.coeff, sm.center, sm.degree), (int(3), rat(1, 2), 3));

        assert!(shifted_monomial(&UniPoly::from_ints(&[0, 1, 0, 1])).unwrap().is_none());
    }

    #[test]
    fn linear_polynomials_are_odd_about_their_root() {
        let p = UniPoly::from_ints(&[3, 2]);
        let w = parity_center(&p, Parity::Odd).unwrap().unwrap();
        assert_eq!(w.center, rat(-3, 2));
        assert!(parity_center(&p, Parity::Even).unwrap().is_none());
    }

    fn poly_around_center() -> impl Strategy<Value = UniPoly> {
        // Random polynomial in (x - m) with sparse parity-friendly support.
        (
            proptest::collection::vec(-2i64..=2, 2..6),
            -6i64..=6,
            1i64..=3,
            0u8..3,
        )
            .prop_map(|(cs, mn, md, mode)| {
                let m = rat(mn, md);
                let base = UniPoly::linear(-m, Rational::one());
                let mut acc = UniPoly::zero();
                for (k, c) in cs.iter().enumerate() {
                    let keep = match mode {
                        0 => k % 2 == 1,
                        1 => k % 2 == 0,
                        _ => true,
                    };
                    if keep {
                        acc = &acc + &base.pow(k as u32).scale(&int(*c));
                    }
                }
                if acc.is_constant() {
                    base.pow(2)
                } else {
                    acc
                }
            })
    }

    proptest! {
        #[test]
        fn parity_matches_brute_force(p in poly_around_center()) {
            for kind in [Parity::Odd, Parity::Even] {
                let got = parity_center(&p, kind).unwrap().map(|w| w.center);
                prop_assert_eq!(got, brute_parity(&p, kind));
            }
        }

        #[test]
        fn never_both_odd_and_even(p in poly_around_center()) {
            let odd = parity_center(&p, Parity::Odd).unwrap();
            let even = parity_center(&p, Parity::Even).unwrap();
            prop_assert!(odd.is_none() || even.is_none());
        }

        #[test]
        fn parity_reflection_identity(p in poly_around_center()) {
            if let Some(w) = parity_center(&p, Parity::Odd).unwrap() {
                let two_m = &w.center * int(2);
                prop_assert_eq!(p.affine_substitute(&int(-1), &two_m).unwrap(), -&p);
            }
            if let Some(w) = parity_center(&p, Parity::Even).unwrap() {
                let two_m = &w.center * int(2);
                prop_assert_eq!(p.affine_substitute(&int(-1), &two_m).unwrap(), p.clone());
            }
        }

        #[test]
        fn shifted_monomial_matches_taylor_oracle(p in poly_around_center()) {
            let got = shifted_monomial(&p).unwrap();
            let n = p.degree().unwrap();
            let mut expect = None;
            for d in 1..=6 {
                for k in -24..=24 {
                    let m = rat(k, d);
                    let t = taylor_at(&p, &m);
                    if t[..n].iter().all(Zero::is_zero) {
                        expect = Some(m);
                    }
                }
            }
            prop_assert_eq!(got.map(|s| s.center), expect);
        }
    }
}
