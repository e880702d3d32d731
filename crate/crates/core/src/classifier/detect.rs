use num_traits::Zero;

use super::conditions::{condition_holds, ConditionId, ConditionMatch, Params};
use crate::error::{Error, Result};
use crate::functional_eq::{coupled_real_solution_exists, solve_linear_match, LinearMatch};
use crate::map_algebra::{GeneralisedStandardMap, WordType};
use crate::poly::{int, parity_center, Parity, Rational, UniPoly};

/// Which table governs a map, and on which map it is evaluated.
#[derive(Debug, Clone)]
pub(crate) enum Scope {
    TableOne,
    /// `inner` has an affine first shear; for degree pattern (≥2, 1) it is
    /// the transposed map `(-p2, -p1)`.
    TableTwo {
        inner: GeneralisedStandardMap,
        transposed: bool,
    },
}

pub(crate) fn scope(l: &GeneralisedStandardMap) -> Result<(WordType, Scope)> {
    let wt = l.word_type()?;
    let s = match wt {
        WordType::TypeI => Scope::TableOne,
        WordType::TypeII => {
            if l.p1.degree() != Some(1) {
                return Err(Error::OutsideScope(
                    "p1 is constant, so the map is conjugate to an elementary map".into(),
                ));
            }
            Scope::TableTwo {
                inner: l.clone(),
                transposed: false,
            }
        }
        WordType::TypeIII => Scope::TableTwo {
            inner: GeneralisedStandardMap::new(-&l.p2, -&l.p1),
            transposed: true,
        },
        WordType::TypeIV => {
            return Err(Error::OutsideScope("p2 is constant, so the map is elementary".into()))
        }
    };
    Ok((wt, s))
}

/// Matches plus notes on rows that may hold over the reals only.
#[derive(Debug, Clone)]
pub struct Detection {
    pub word_type: WordType,
    pub matches: Vec<ConditionMatch>,
    pub caveats: Vec<String>,
}

/// All satisfied rows with exact rational parameters.
pub fn detect(l: &GeneralisedStandardMap) -> Result<Vec<ConditionMatch>> {
    Ok(detect_full(l)?.matches)
}

pub fn detect_full(l: &GeneralisedStandardMap) -> Result<Detection> {
    let (word_type, sc) = scope(l)?;
    let (matches, caveats) = match &sc {
        Scope::TableOne => table_one(&l.p1, &l.p2)?,
        Scope::TableTwo { inner, transposed } => (table_two(inner, *transposed)?, Vec::new()),
    };
    let (p1, p2) = match &sc {
        Scope::TableOne => (&l.p1, &l.p2),
        Scope::TableTwo { inner, .. } => (&inner.p1, &inner.p2),
    };
    for m in &matches {
        for params in std::iter::once(&m.params).chain(&m.alternatives) {
            if !condition_holds(m.id, params, p1, p2) {
                return Err(Error::Internal(format!("{} detected with parameters ({params}) that fail its identity", m.id)));
            }
        }
    }
    Ok(Detection {
        word_type,
        matches,
        caveats,
    })
}

fn twice(r: &Rational) -> Rational {
    r * int(2)
}

fn push(out: &mut Vec<ConditionMatch>, id: ConditionId, mut all: Vec<Params>, transposed: bool) {
    if all.is_empty() {
        return;
    }
    let params = all.remove(0);
    out.push(ConditionMatch {
        id,
        params,
        alternatives: all,
        transposed,
    });
}

fn table_one(p1: &UniPoly, p2: &UniPoly) -> Result<(Vec<ConditionMatch>, Vec<String>)> {
    use ConditionId::*;
    let odd1 = parity_center(p1, Parity::Odd)?.map(|w| w.center);
    let even1 = parity_center(p1, Parity::Even)?.map(|w| w.center);
    let odd2 = parity_center(p2, Parity::Odd)?.map(|w| w.center);
    let even2 = parity_center(p2, Parity::Even)?.map(|w| w.center);

    let set = solve_linear_match(p1, p2)?;
    let plus = set.coupled(1);
    let minus = set.coupled(-1);

    // p2(y) = (±1/a)·p1(y/a + e): v = 1/a, w = e.
    let shift_form = |m: &LinearMatch| Params {
        a: Some(m.v.recip()),
        e: Some(m.w.clone()),
        ..Params::default()
    };
    // p2(y) = (±1/a)·p1((y - c)/a) with p1 odd about (e - c/a)/2.
    let centred_form = |m: &LinearMatch, center: &Rational| {
        let a = m.v.recip();
        let c = -&m.w * &a;
        let e = twice(center) + &c / &a;
        Params {
            a: Some(a),
            c: Some(c),
            e: Some(e),
            ..Params::default()
        }
    };

    let mut out = Vec::new();
    if let (Some(m1), Some(m2)) = (&odd1, &odd2) {
        push(&mut out, T1_S1, vec![Params { c: Some(twice(m2)), e: Some(twice(m1)), ..Params::default() }], false);
    }
    push(&mut out, T1_S2, plus.iter().map(shift_form).collect(), false);
    if let Some(m1) = &odd1 {
        push(&mut out, T1_S3, minus.iter().map(|m| centred_form(m, m1)).collect(), false);
    }
    if let Some(m2) = &odd2 {
        push(&mut out, T1_R1, vec![Params { c: Some(twice(m2)), ..Params::default() }], false);
    }
    if let Some(m1) = &odd1 {
        push(&mut out, T1_R2, vec![Params { e: Some(twice(m1)), ..Params::default() }], false);
    }
    if let (Some(m1), Some(m2)) = (&even1, &even2) {
        push(&mut out, T1_R3, vec![Params { c: Some(twice(m2)), e: Some(twice(m1)), ..Params::default() }], false);
    }
    push(&mut out, T1_R4, minus.iter().map(shift_form).collect(), false);
    if let Some(m1) = &odd1 {
        push(&mut out, T1_R5, plus.iter().map(|m| centred_form(m, m1)).collect(), false);
    }

    let mut caveats = Vec::new();
    if p1.degree() == p2.degree() {
        for (sign, rows) in [(1, [T1_S2, T1_R5]), (-1, [T1_R4, T1_S3])] {
            let rational = if sign == 1 { &plus } else { &minus };
            if rational.is_empty() && coupled_real_solution_exists(p1, p2, sign) {
                for (k, id) in rows.into_iter().enumerate() {
                    if k == 1 && odd1.is_none() {
                        continue;
                    }
                    caveats.push(format!(
                        "{id}: no rational parameters exist, but the condition has a real solution"
                    ));
                }
            }
        }
    }
    Ok((out, caveats))
}

fn table_two(inner: &GeneralisedStandardMap, transposed: bool) -> Result<Vec<ConditionMatch>> {
    use ConditionId::*;
    let big_a = inner.p1.coeff(1);
    let big_b = inner.p1.coeff(0);
    debug_assert!(!big_a.is_zero());
    let base = Params {
        big_a: Some(big_a),
        big_b: Some(big_b),
        ..Params::default()
    };
    let mut out = Vec::new();
    if let Some(w) = parity_center(&inner.p2, Parity::Odd)? {
        let with_e = Params {
            e: Some(twice(&w.center)),
            ..base.clone()
        };
        push(&mut out, T2_S1, vec![with_e.clone()], transposed);
        push(&mut out, T2_R1, vec![with_e], transposed);
    }
    push(&mut out, T2_R2, vec![base], transposed);
    Ok(out)
}
