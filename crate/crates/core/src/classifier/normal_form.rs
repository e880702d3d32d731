use num_traits::{One, Zero};

use super::conditions::{ConditionId, ConditionMatch};
use crate::error::{Error, Result};
use crate::map_algebra::{DiagonalAffine, GeneralisedStandardMap};
use crate::poly::{int, parity_center, Parity, Rational, UniPoly};

/// The map conjugated by `change` into the representative of the row `row`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub change: DiagonalAffine,
    pub map: GeneralisedStandardMap,
    pub row: ConditionId,
}

const PRIORITY: [ConditionId; 11] = {
    use ConditionId::*;
    [T1_S3, T1_R5, T1_S2, T1_S1, T1_R3, T1_R4, T1_R1, T1_R2, T2_S1, T2_R1, T2_R2]
};

fn half(r: &Rational) -> Rational {
    r / int(2)
}

fn odd_at_zero(p: &UniPoly) -> bool {
    parity_center(p, Parity::Odd).ok().flatten().is_some_and(|w| w.center.is_zero())
}

fn even_at_zero(p: &UniPoly) -> bool {
    parity_center(p, Parity::Even).ok().flatten().is_some_and(|w| w.center.is_zero())
}

/// The normal-form condition of a row.
fn normal_condition(row: ConditionId, n: &GeneralisedStandardMap, transposed: bool) -> bool {
    use ConditionId::*;
    let (p1, p2) = (&n.p1, &n.p2);
    if transposed {
        // Mirror image: the affine shear becomes the identity-slope p2 = x
        // and the parity conditions move to p1.
        let unit = p2 == &UniPoly::from_ints(&[0, 1]);
        return match row {
            T2_S1 | T2_R1 => unit && odd_at_zero(p1),
            _ => unit,
        };
    }
    match row {
        T1_S1 => odd_at_zero(p1) && odd_at_zero(p2),
        T1_S2 => p2 == p1,
        T1_S3 => odd_at_zero(p1) && *p2 == -p1,
        T1_R1 => odd_at_zero(p2),
        T1_R2 => odd_at_zero(p1),
        T1_R3 => even_at_zero(p1) && even_at_zero(p2),
        T1_R4 => *p2 == -p1,
        T1_R5 => odd_at_zero(p1) && p2 == p1,
        T2_S1 | T2_R1 => p1 == &UniPoly::from_ints(&[0, 1]) && odd_at_zero(p2),
        T2_R2 => p1 == &UniPoly::from_ints(&[0, 1]),
    }
}

fn change_for(m: &ConditionMatch, l: &GeneralisedStandardMap) -> Result<DiagonalAffine> {
    use ConditionId::*;
    let p = &m.params;
    let one = Rational::one;
    let zero = Rational::zero;
    if m.transposed {
        // L = t M⁻¹ t with M = (-p2, -p1); normalise p2 to x and centre p1.
        let big_a = l.p2.coeff(1);
        let big_b = l.p2.coeff(0);
        let delta = match m.id {
            T2_S1 | T2_R1 => -half(p.e()),
            _ => zero(),
        };
        return DiagonalAffine::new(big_a, big_b, one(), delta);
    }
    match m.id {
        T1_S1 | T1_R3 => DiagonalAffine::new(one(), -half(p.c()), one(), -half(p.e())),
        T1_S2 | T1_R4 => DiagonalAffine::new(p.a().recip(), p.e().clone(), one(), zero()),
        T1_S3 | T1_R5 => {
            let (a, c, e) = (p.a(), p.c(), p.e());
            DiagonalAffine::new(one(), -half(&(c + a * e)), a.clone(), -half(&(a * e - c)))
        }
        T1_R1 => DiagonalAffine::new(one(), -half(p.c()), one(), zero()),
        T1_R2 => DiagonalAffine::new(one(), zero(), one(), -half(p.e())),
        T2_S1 | T2_R1 => DiagonalAffine::new(one(), -half(p.e()), p.big_a().clone(), p.big_b().clone()),
        T2_R2 => DiagonalAffine::new(one(), zero(), p.big_a().clone(), p.big_b().clone()),
    }
}

/// Conjugates `l` by the affine change of the highest-priority matched row
/// and checks the row's normal-form condition on the result.
pub fn normal_form(l: &GeneralisedStandardMap, matches: &[ConditionMatch]) -> Result<NormalForm> {
    let m = PRIORITY
        .iter()
        .find_map(|id| matches.iter().find(|m| m.id == *id))
        .ok_or(Error::NoNormalForm)?;
    let change = change_for(m, l)?;
    let map = l.conjugate_by_affine(&change)?;
    if !normal_condition(m.id, &map, m.transposed) {
        return Err(Error::Internal(format!("{} normal form fails its condition: {map}", m.id)));
    }
    Ok(NormalForm { change, map, row: m.id })
}
