use std::fmt;

use num_traits::One;

use super::conditions::{ConditionId, ConditionMatch, Params};
use crate::error::{Error, Result};
use crate::map_algebra::{GeneralisedStandardMap, PlanarPolyMap};
use crate::poly::{int, BiPoly, PolyPair, Rational, UniPoly};
use crate::verifier::{check_reversing_standard, check_symmetry_standard};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessKind {
    Symmetry,
    ReversingSymmetry,
}

/// Certified order information of a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderInfo {
    Involution,
    Order4,
    SquareRootOfL,
    /// `S² = S1' ∘ L` for the shifted point reflection `S1'`.
    SquareRootOfS1L,
    Infinite,
}

impl fmt::Display for OrderInfo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Involution => "involution",
            Self::Order4 => "order 4",
            Self::SquareRootOfL => "square root of L",
            Self::SquareRootOfS1L => "square root of S1∘L",
            Self::Infinite => "infinite order",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub kind: WitnessKind,
    pub condition: ConditionId,
    pub map: PlanarPolyMap,
    pub order: OrderInfo,
    /// `L ∘ R`, the second involution, for involutory reversing symmetries.
    pub companion: Option<PlanarPolyMap>,
}

fn lin(cx: Rational, cy: Rational, c0: Rational) -> BiPoly {
    BiPoly::from_terms([((1, 0), cx), ((0, 1), cy), ((0, 0), c0)])
}

fn zero() -> Rational {
    int(0)
}

fn one() -> Rational {
    Rational::one()
}

/// `p(x/a + shift)` as a polynomial in `x`.
fn inner_x(p: &UniPoly, a: &Rational, shift: &Rational) -> BiPoly {
    BiPoly::from_uni_x(&p.affine_substitute(&a.recip(), shift).expect("a is nonzero"))
}

/// Forward and inverse components of a row's witness, and for `S3` the
/// shifted point reflection `S1'` with `S3² = S1' ∘ L`.
fn formulas(id: ConditionId, p: &Params, l: &GeneralisedStandardMap) -> (PolyPair, PolyPair, Option<PolyPair>) {
    use ConditionId::*;
    let p1y = BiPoly::from_uni_y(&l.p1);
    let x = BiPoly::x;
    let y = BiPoly::y;
    let same = |f: PolyPair| (f.clone(), f, None);
    match id {
        T1_S1 => same(PolyPair::new(lin(-one(), zero(), p.c().clone()), lin(zero(), -one(), p.e().clone()))),
        T1_S2 => {
            let (a, e) = (p.a(), p.e());
            let inv_a = a.recip();
            let f = PolyPair::new(
                lin(zero(), a.clone(), -(e * a)),
                &lin(inv_a.clone(), zero(), e.clone()) + &p1y.scale(&inv_a),
            );
            let g = PolyPair::new(
                &lin(zero(), a.clone(), -(a * e)) - &inner_x(&l.p1, a, e),
                lin(inv_a, zero(), e.clone()),
            );
            (f, g, None)
        }
        T1_S3 => {
            let (a, c, e) = (p.a(), p.c(), p.e());
            let inv_a = a.recip();
            let c_over_a = c * &inv_a;
            let f = PolyPair::new(
                lin(zero(), a.clone(), c.clone()),
                &lin(-&inv_a, zero(), e.clone()) - &p1y.scale(&inv_a),
            );
            let g = PolyPair::new(
                &lin(zero(), -a, a * e) - &inner_x(&l.p1, a, &-&c_over_a),
                lin(inv_a, zero(), -&c_over_a),
            );
            let s1 = PolyPair::new(lin(-one(), zero(), c + a * e), lin(zero(), -one(), e - &c_over_a));
            (f, g, Some(s1))
        }
        T1_R1 => same(PolyPair::new(&lin(-one(), zero(), p.c().clone()) - &p1y, y())),
        T1_R2 => same(PolyPair::new(&x() + &p1y, lin(zero(), -one(), p.e().clone()))),
        T1_R3 => same(PolyPair::new(
            &lin(-one(), zero(), p.c().clone()) - &p1y,
            lin(zero(), -one(), p.e().clone()),
        )),
        T1_R4 => {
            let (a, e) = (p.a(), p.e());
            same(PolyPair::new(lin(zero(), a.clone(), -(e * a)), lin(a.recip(), zero(), e.clone())))
        }
        T1_R5 => {
            let (a, c, e) = (p.a(), p.c(), p.e());
            let f = PolyPair::new(lin(zero(), a.clone(), c.clone()), lin(-a.recip(), zero(), e.clone()));
            let g = PolyPair::new(lin(zero(), -a, a * e), lin(a.recip(), zero(), -(c / a)));
            (f, g, None)
        }
        T2_S1 => {
            let shift = -(p.big_b() * int(2)) / p.big_a();
            same(PolyPair::new(lin(-one(), zero(), p.e().clone()), lin(zero(), -one(), shift)))
        }
        T2_R1 => same(PolyPair::new(
            lin(-one(), zero(), p.e().clone()),
            &y() - &BiPoly::from_uni_x(&l.p2),
        )),
        T2_R2 => {
            let shift = -(p.big_b() * int(2)) / p.big_a();
            same(PolyPair::new(
                x(),
                &lin(zero(), -one(), shift) + &BiPoly::from_uni_x(&l.p2),
            ))
        }
    }
}

fn swap_planar(m: &PlanarPolyMap) -> PlanarPolyMap {
    PlanarPolyMap::new(m.forward().conjugate_by_swap(), m.inverse_pair().conjugate_by_swap())
        .expect("conjugate of an automorphism")
}

/// The explicit witness of a matched row, with its defining relation and
/// order re-verified by exact composition.
pub fn build_witness(m: &ConditionMatch, l: &GeneralisedStandardMap) -> Result<Witness> {
    let fail = |what: &str| Error::Internal(format!("{} witness: {what}", m.id));
    let map = if m.transposed {
        // Rows of the transposed map M = (-p2, -p1) satisfy L = t M⁻¹ t, so
        // their witnesses carry over by conjugation with the swap t.
        let inner = GeneralisedStandardMap::new(-&l.p2, -&l.p1);
        let (f, g, _) = formulas(m.id, &m.params, &inner);
        let wm = PlanarPolyMap::new(f, g).map_err(|_| fail("formula is not invertible"))?;
        swap_planar(&wm)
    } else {
        let (f, g, _) = formulas(m.id, &m.params, l);
        PlanarPolyMap::new(f, g).map_err(|_| fail("formula is not invertible"))?
    };
    let lp = l.to_planar();
    let kind = if m.id.is_symmetry() {
        if !check_symmetry_standard(map.forward(), l) {
            return Err(fail("does not commute with L"));
        }
        WitnessKind::Symmetry
    } else {
        if !check_reversing_standard(map.forward(), l) {
            return Err(fail("does not conjugate L to its inverse"));
        }
        WitnessKind::ReversingSymmetry
    };

    let square = map.forward().after(map.forward());
    let order = match m.id {
        ConditionId::T1_S2 => {
            if square != *lp.forward() {
                return Err(fail("square is not L"));
            }
            OrderInfo::SquareRootOfL
        }
        ConditionId::T1_S3 => {
            let (_, _, s1) = formulas(m.id, &m.params, l);
            let s1l = s1.expect("S3 carries S1'").after(lp.forward());
            if square != s1l {
                return Err(fail("square is not S1'∘L"));
            }
            OrderInfo::SquareRootOfS1L
        }
        ConditionId::T1_R5 => {
            if square.is_identity() || !square.after(&square).is_identity() {
                return Err(fail("order is not four"));
            }
            OrderInfo::Order4
        }
        _ => {
            if !square.is_identity() {
                return Err(fail("not an involution"));
            }
            OrderInfo::Involution
        }
    };

    let companion = if kind == WitnessKind::ReversingSymmetry && order == OrderInfo::Involution {
        let c = l.after_pair(map.forward());
        // (L∘R)∘(L∘R) = L∘(R∘(L∘R)), grouped so that no intermediate
        // expansion exceeds the degree of R∘L.
        if !l.after_pair(&map.forward().after(&c)).is_identity() {
            return Err(fail("companion L∘R is not an involution"));
        }
        Some(PlanarPolyMap::from_parts_unchecked(c.clone(), c))
    } else {
        None
    };

    Ok(Witness {
        kind,
        condition: m.id,
        map,
        order,
        companion,
    })
}
