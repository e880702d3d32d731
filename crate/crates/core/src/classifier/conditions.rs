use std::fmt;

use num_traits::One;

use crate::poly::{Rational, UniPoly};

/// Rows of the two condition tables: `T1_*` for both shears nonlinear,
/// `T2_*` for `p1(y) = A·y + B` with `A ≠ 0`.
#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConditionId {
    T1_S1,
    T1_S2,
    T1_S3,
    T1_R1,
    T1_R2,
    T1_R3,
    T1_R4,
    T1_R5,
    T2_S1,
    T2_R1,
    T2_R2,
}

impl ConditionId {
    pub const TABLE1: [ConditionId; 8] = [
        Self::T1_S1,
        Self::T1_S2,
        Self::T1_S3,
        Self::T1_R1,
        Self::T1_R2,
        Self::T1_R3,
        Self::T1_R4,
        Self::T1_R5,
    ];
    pub const TABLE2: [ConditionId; 3] = [Self::T2_S1, Self::T2_R1, Self::T2_R2];

    pub fn is_symmetry(self) -> bool {
        matches!(self, Self::T1_S1 | Self::T1_S2 | Self::T1_S3 | Self::T2_S1)
    }

    pub fn is_reversing(self) -> bool {
        !self.is_symmetry()
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::T1_S1 => "T1_S1",
            Self::T1_S2 => "T1_S2",
            Self::T1_S3 => "T1_S3",
            Self::T1_R1 => "T1_R1",
            Self::T1_R2 => "T1_R2",
            Self::T1_R3 => "T1_R3",
            Self::T1_R4 => "T1_R4",
            Self::T1_R5 => "T1_R5",
            Self::T2_S1 => "T2_S1",
            Self::T2_R1 => "T2_R1",
            Self::T2_R2 => "T2_R2",
        }
    }

    /// Short row label, `S1` … `R5`.
    pub fn row(self) -> &'static str {
        &self.name()[3..]
    }

    pub fn parse(s: &str) -> Option<ConditionId> {
        Self::TABLE1
            .iter()
            .chain(Self::TABLE2.iter())
            .copied()
            .find(|id| id.name() == s)
    }
}

impl fmt::Display for ConditionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Solved parameters of a row. `big_a`, `big_b` are the coefficients of the
/// affine shear in the second table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Params {
    pub a: Option<Rational>,
    pub c: Option<Rational>,
    pub e: Option<Rational>,
    pub big_a: Option<Rational>,
    pub big_b: Option<Rational>,
}

impl Params {
    pub fn entries(&self) -> Vec<(&'static str, &Rational)> {
        [
            ("a", &self.a),
            ("c", &self.c),
            ("e", &self.e),
            ("A", &self.big_a),
            ("B", &self.big_b),
        ]
        .into_iter()
        .filter_map(|(k, v)| v.as_ref().map(|v| (k, v)))
        .collect()
    }

    pub(crate) fn a(&self) -> &Rational {
        self.a.as_ref().expect("row needs a")
    }
    pub(crate) fn c(&self) -> &Rational {
        self.c.as_ref().expect("row needs c")
    }
    pub(crate) fn e(&self) -> &Rational {
        self.e.as_ref().expect("row needs e")
    }
    pub(crate) fn big_a(&self) -> &Rational {
        self.big_a.as_ref().expect("row needs A")
    }
    pub(crate) fn big_b(&self) -> &Rational {
        self.big_b.as_ref().expect("row needs B")
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries()
            .iter()
            .map(|(k, v)| format!("{k}={}", crate::poly::rational_string(v)))
            .collect();
        f.write_str(&parts.join(", "))
    }
}

/// A satisfied row with its parameters. When the map's shears are of
/// degrees (≥2, 1) the row was found on the transposed map
/// `(p1, p2) -> (-p2, -p1)` and `transposed` is set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionMatch {
    pub id: ConditionId,
    pub params: Params,
    /// Further rational parameter sets satisfying the same row.
    pub alternatives: Vec<Params>,
    pub transposed: bool,
}

fn odd_about(p: &UniPoly, two_m: &Rational) -> bool {
    p.affine_substitute(&-Rational::one(), two_m)
        .is_ok_and(|q| q == -p)
}

fn even_about(p: &UniPoly, two_m: &Rational) -> bool {
    p.affine_substitute(&-Rational::one(), two_m)
        .is_ok_and(|q| q == *p)
}

/// `q(y) = sign/a · p(y/a + shift)`.
fn scaled_match(p: &UniPoly, q: &UniPoly, a: &Rational, shift: &Rational, sign: i64) -> bool {
    let inv = a.recip();
    let factor = &inv * Rational::from_integer(sign.into());
    p.affine_substitute(&inv, shift)
        .is_ok_and(|s| s.scale(&factor) == *q)
}

/// Re-checks a row's defining identity for explicit parameters, straight
/// from the table entries. `p1`, `p2` are those of the map the row was
/// detected on (the transposed map for transposed matches).
pub fn condition_holds(id: ConditionId, params: &Params, p1: &UniPoly, p2: &UniPoly) -> bool {
    use ConditionId::*;
    let p = params;
    match id {
        T1_S1 => odd_about(p1, p.e()) && odd_about(p2, p.c()),
        T1_S2 => scaled_match(p1, p2, p.a(), p.e(), 1),
        T1_S3 => {
            let c_over_a = p.c() / p.a();
            odd_about(p1, &(p.e() - &c_over_a)) && scaled_match(p1, p2, p.a(), &-c_over_a, -1)
        }
        T1_R1 => odd_about(p2, p.c()),
        T1_R2 => odd_about(p1, p.e()),
        T1_R3 => even_about(p1, p.e()) && even_about(p2, p.c()),
        T1_R4 => scaled_match(p1, p2, p.a(), p.e(), -1),
        T1_R5 => {
            let c_over_a = p.c() / p.a();
            odd_about(p1, &(p.e() - &c_over_a)) && scaled_match(p1, p2, p.a(), &-c_over_a, 1)
        }
        T2_S1 | T2_R1 => {
            affine_shear_matches(p1, p) && odd_about(p2, p.e())
        }
        T2_R2 => affine_shear_matches(p1, p),
    }
}

fn affine_shear_matches(p1: &UniPoly, p: &Params) -> bool {
    p1.degree() == Some(1) && p1.coeff(1) == *p.big_a() && p1.coeff(0) == *p.big_b()
}
