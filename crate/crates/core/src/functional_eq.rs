//! Exact solvers for the scalar functional equations behind every table
//! condition: the self-relation `p(x) = γ·p(αx + β)` and the linear match
//! `q(y) = u·p(v·y + w)` between two given polynomials.
//!
//! Only rational solutions are produced. Sign conventions of individual
//! conditions are applied by the classifier, not here.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{
    parity_center, rational_pow, rational_roots, shifted_monomial, Parity,
    Rational, ShiftedMonomial, UniPoly,
};

/// `(α, β, γ)` with `p(x) = γ·p(αx + β)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationTriple {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
}

impl RelationTriple {
    pub fn holds_for(&self, p: &UniPoly) -> bool {
        match p.affine_substitute(&self.alpha, &self.beta) {
            Ok(q) => q.scale(&self.gamma) == *p,
            Err(_) => false,
        }
    }
}

/// One family of solutions of `p(x) = γ·p(αx + β)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SelfRelationFamily {
    /// `(1, 0, 1)`, valid for every `p`.
    Trivial,
    /// `p = c(x - m)^n`: any `α ∉ {0, 1}` with `β = m(1 - α)`, `γ = α^-n`.
    ShiftedMonomial(ShiftedMonomial),
    /// `p` even around `m`: `(-1, 2m, 1)`.
    EvenCenter { center: Rational },
    /// `p` odd around `m`: `(-1, 2m, -1)`.
    OddCenter { center: Rational },
}

impl SelfRelationFamily {
    /// The fixed triple, for every family except the free-α monomial one.
    pub fn triple(&self) -> Option<RelationTriple> {
        let two = Rational::from_integer(2.into());
        match self {
            Self::Trivial => Some(RelationTriple {
                alpha: Rational::one(),
                beta: Rational::zero(),
                gamma: Rational::one(),
            }),
            Self::ShiftedMonomial(_) => None,
            Self::EvenCenter { center } => Some(RelationTriple {
                alpha: -Rational::one(),
                beta: center * two,
                gamma: Rational::one(),
            }),
            Self::OddCenter { center } => Some(RelationTriple {
                alpha: -Rational::one(),
                beta: center * two,
                gamma: -Rational::one(),
            }),
        }
    }

    /// Member of the monomial family at a chosen `α`.
    pub fn instantiate(&self, alpha: &Rational) -> Option<RelationTriple> {
        match self {
            Self::ShiftedMonomial(sm) if !alpha.is_zero() && !alpha.is_one() => {
                Some(RelationTriple {
                    alpha: alpha.clone(),
                    beta: &sm.center * (Rational::one() - alpha),
                    gamma: rational_pow(alpha, -(sm.degree as i32)),
                })
            }
            Self::ShiftedMonomial(_) => None,
            other => other.triple(),
        }
    }
}

/// Every family of solutions of `p(x) = γ·p(αx + β)` that applies to `p`.
pub fn solve_self_relation(p: &UniPoly) -> Result<Vec<SelfRelationFamily>> {
    if p.is_constant() {
        return Err(Error::ConstantPolynomial("self-relation"));
    }
    let mut out = vec![SelfRelationFamily::Trivial];
    if let Some(sm) = shifted_monomial(p)? {
        out.push(SelfRelationFamily::ShiftedMonomial(sm));
    }
    if let Some(w) = parity_center(p, Parity::Even)? {
        out.push(SelfRelationFamily::EvenCenter { center: w.center });
    }
    if let Some(w) = parity_center(p, Parity::Odd)? {
        out.push(SelfRelationFamily::OddCenter { center: w.center });
    }
    Ok(out)
}

/// `q(y) = u·p(v·y + w)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMatch {
    pub u: Rational,
    pub v: Rational,
    pub w: Rational,
}

impl LinearMatch {
    pub fn holds(&self, p: &UniPoly, q: &UniPoly) -> bool {
        if self.u.is_zero() {
            return false;
        }
        match p.affine_substitute(&self.v, &self.w) {
            Ok(s) => s.scale(&self.u) == *q,
            Err(_) => false,
        }
    }
}

/// Both polynomials are shifted monomials of the same degree `n`; every
/// `v ≠ 0` works with `u·vⁿ = ratio` and `w = p_center - v·q_center`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialFamily {
    pub ratio: Rational,
    pub degree: usize,
    pub p_center: Rational,
    pub q_center: Rational,
}

impl MonomialFamily {
    pub fn at(&self, v: &Rational) -> Option<LinearMatch> {
        if v.is_zero() {
            return None;
        }
        Some(LinearMatch {
            u: &self.ratio / rational_pow(v, self.degree as i32),
            v: v.clone(),
            w: &self.p_center - v * &self.q_center,
        })
    }

    pub fn contains(&self, m: &LinearMatch) -> bool {
        self.at(&m.v).is_some_and(|s| s == *m)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearMatchSet {
    Finite(Vec<LinearMatch>),
    Family(MonomialFamily),
}

impl LinearMatchSet {
    pub fn is_empty(&self) -> bool {
        matches!(self, Self::Finite(v) if v.is_empty())
    }

    pub fn contains(&self, m: &LinearMatch) -> bool {
        match self {
            Self::Finite(v) => v.contains(m),
            Self::Family(f) => f.contains(m),
        }
    }

    /// The solutions with `u = sign·v`, the coupling shared by every
    /// two-polynomial table condition (`sign` is `1` or `-1`).
    pub fn coupled(&self, sign: i32) -> Vec<LinearMatch> {
        let sign = Rational::from_integer(sign.into());
        let mut out: Vec<LinearMatch> = match self {
            Self::Finite(v) => v.iter().filter(|m| m.u == &sign * &m.v).cloned().collect(),
            Self::Family(f) => {
                // u = ratio / v^n = sign v  <=>  v^(n+1) = sign * ratio
                let target = &sign * &f.ratio;
                rational_roots(&target, f.degree as u32 + 1)
                    .iter()
                    .filter_map(|v| f.at(v))
                    .collect()
            }
        };
        out.sort_by(canonical_order);
        out
    }
}

/// `v = 1` first, then positive before negative, then by magnitude.
fn canonical_order(a: &LinearMatch, b: &LinearMatch) -> Ordering {
    let key = |m: &LinearMatch| (!m.v.is_one(), m.v.is_negative(), m.v.abs());
    key(a).cmp(&key(b)).then_with(|| a.w.cmp(&b.w))
}

fn depressed(p: &UniPoly) -> (Rational, UniPoly) {
    let n = p.degree().expect("non-constant");
    let lead = p.leading().expect("non-zero");
    let center = -p.coeff(n - 1) / (Rational::from_integer((n as i64).into()) * lead);
    let shifted = p
        .affine_substitute(&Rational::one(), &center)
        .expect("unit scale");
    (center, shifted)
}

/// All rational `(u, v, w)` with `q(y) = u·p(v·y + w)`.
pub fn solve_linear_match(p: &UniPoly, q: &UniPoly) -> Result<LinearMatchSet> {
    if p.is_constant() || q.is_constant() {
        return Err(Error::ConstantPolynomial("linear match"));
    }
    let n = p.degree().unwrap();
    if q.degree() != Some(n) {
        return Ok(LinearMatchSet::Finite(Vec::new()));
    }
    // Shift both to vanish in degree n-1; the match then reduces to
    // Q(y) = u·P(v·y), i.e. Q_k = u·P_k·v^k for each k.
    let (p_center, big_p) = depressed(p);
    let (q_center, big_q) = depressed(q);
    let pn = big_p.coeff(n);
    let qn = big_q.coeff(n);

    let mut constraints: Vec<(u32, Rational)> = Vec::new();
    for k in 0..n {
        let (pk, qk) = (big_p.coeff(k), big_q.coeff(k));
        match (pk.is_zero(), qk.is_zero()) {
            (true, true) => {}
            (true, false) | (false, true) => return Ok(LinearMatchSet::Finite(Vec::new())),
            (false, false) => {
                // v^(n-k) = Q_n P_k / (P_n Q_k)
                constraints.push(((n - k) as u32, (&qn * &pk) / (&pn * &qk)));
            }
        }
    }
    if constraints.is_empty() {
        return Ok(LinearMatchSet::Family(MonomialFamily {
            ratio: qn / pn,
            degree: n,
            p_center,
            q_center,
        }));
    }
    constraints.sort_by_key(|(d, _)| *d);
    let (d0, r0) = &constraints[0];
    let mut out: Vec<LinearMatch> = rational_roots(r0, *d0)
        .into_iter()
        .filter(|v| !v.is_zero())
        .filter(|v| {
            constraints
                .iter()
                .all(|(d, r)| rational_pow(v, *d as i32) == *r)
        })
        .map(|v| LinearMatch {
            u: &qn / (&pn * rational_pow(&v, n as i32)),
            w: &p_center - &v * &q_center,
            v,
        })
        .collect();
    debug_assert!(out.iter().all(|m| m.holds(p, q)));
    out.sort_by(canonical_order);
    Ok(LinearMatchSet::Finite(out))
}

/// Whether `q(y) = sign·v·p(v·y + w)` has a real solution, checked in
/// floating point. Used only to flag conditions that fail over the rationals
/// but may hold over the reals.
pub fn coupled_real_solution_exists(p: &UniPoly, q: &UniPoly, sign: i32) -> bool {
    if p.is_constant() || q.is_constant() || p.degree() != q.degree() {
        return false;
    }
    let n = p.degree().unwrap();
    let (_, big_p) = depressed(p);
    let (_, big_q) = depressed(q);
    let pf = big_p.to_f64_coeffs();
    let qf = big_q.to_f64_coeffs();
    let s = sign as f64;
    // Q_k = sign·P_k·v^(k+1); the top coefficient fixes |v|.
    let r = s * qf[n] / pf[n];
    let e = (n + 1) as f64;
    let mut candidates = Vec::new();
    if (n + 1) % 2 == 1 {
        candidates.push(r.signum() * r.abs().powf(1.0 / e));
    } else if r > 0.0 {
        let root = r.powf(1.0 / e);
        candidates.extend([root, -root]);
    }
    candidates.into_iter().any(|v| {
        (0..=n).all(|k| {
            let lhs = qf.get(k).copied().unwrap_or(0.0);
            let rhs = s * pf.get(k).copied().unwrap_or(0.0) * v.powi(k as i32 + 1);
            (lhs - rhs).abs() <= 1e-9 * (1.0 + lhs.abs().max(rhs.abs()))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat};
    use proptest::prelude::*;

    #[test]
    fn odd_cubic_self_relation() {
        let p = UniPoly::from_ints(&[0, 1, 0, 1]);
        let fams = solve_self_relation(&p).unwrap();
        assert_eq!(
            fams,
            vec![
                SelfRelationFamily::Trivial,
                SelfRelationFamily::OddCenter { center: int(0) }
            ]
        );
        let t = fams[1].triple().unwrap();
        assert_eq!((t.alpha.clone(), t.beta.clone(), t.gamma.clone()), (int(-1), int(0), int(-1)));
        assert!(t.holds_for(&p));
    }

    #[test]
    fn square_has_monomial_and_even_families() {
        let p = UniPoly::from_ints(&[0, 0, 1]);
        let fams = solve_self_relation(&p).unwrap();
        assert_eq!(fams.len(), 3);
        assert!(matches!(&fams[1], SelfRelationFamily::ShiftedMonomial(sm)
            if sm.coeff == int(1) && sm.center == int(0) && sm.degree == 2));
        assert_eq!(fams[2], SelfRelationFamily::EvenCenter { center: int(0) });
        // alpha = 3: p(x) = 3^-2 p(3x)
        let t = fams[1].instantiate(&int(3)).unwrap();
        assert_eq!(t.gamma, rat(1, 9));
        assert!(t.holds_for(&p));
    }

    #[test]
    fn shifted_square_families() {
        // x^2 + x = (x + 1/2)^2 - 1/4: not a pure shifted monomial.
        let p = UniPoly::from_ints(&[0, 1, 1]);
        let fams = solve_self_relation(&p).unwrap();
        assert_eq!(
            fams,
            vec![
                SelfRelationFamily::Trivial,
                SelfRelationFamily::EvenCenter { center: rat(-1, 2) }
            ]
        );
        // (x + 1/2)^2 itself is one.
        let q = UniPoly::from_coeffs(vec![rat(1, 4), int(1), int(1)]);
        let fams = solve_self_relation(&q).unwrap();
        assert!(fams.iter().any(|f| matches!(f, SelfRelationFamily::ShiftedMonomial(sm)
            if sm.center == rat(-1, 2) && sm.degree == 2)));
        for f in &fams {
            if let Some(t) = f.instantiate(&int(2)) {
                assert!(t.holds_for(&q), "{f:?}");
            }
        }
    }

    #[test]
    fn constant_has_no_self_relation() {
        assert_eq!(
            solve_self_relation(&UniPoly::from_ints(&[4])),
            Err(Error::ConstantPolynomial("self-relation"))
        );
    }

    #[test]
    fn odd_cubic_self_matches() {
        let p = UniPoly::from_ints(&[0, 1, 0, 1]);
        let set = solve_linear_match(&p, &p).unwrap();
        let expect = vec![
            LinearMatch { u: int(1), v: int(1), w: int(0) },
            LinearMatch { u: int(-1), v: int(-1), w: int(0) },
        ];
        assert_eq!(set, LinearMatchSet::Finite(expect));
    }

    #[test]
    fn monomial_scaling_family() {
        let p = UniPoly::from_ints(&[0, 0, 0, 1]);
        let q = UniPoly::from_coeffs(vec![int(0), int(0), int(0), rat(1, 8)]);
        let set = solve_linear_match(&p, &q).unwrap();
        let LinearMatchSet::Family(f) = &set else {
            panic!("expected a family, got {set:?}");
        };
        assert_eq!(f.ratio, rat(1, 8));
        assert!(set.contains(&LinearMatch { u: int(1), v: rat(1, 2), w: int(0) }));
        assert!(set.contains(&LinearMatch { u: rat(1, 8), v: int(1), w: int(0) }));
    }

    #[test]
    fn shifted_quadratic_match() {
        let p = UniPoly::from_ints(&[1, 0, 1]);
        let q = UniPoly::from_ints(&[5, 4, 4]);
        let set = solve_linear_match(&p, &q).unwrap();
        assert_eq!(
            set,
            LinearMatchSet::Finite(vec![
                LinearMatch { u: int(4), v: int(1), w: rat(1, 2) },
                LinearMatch { u: int(4), v: int(-1), w: rat(-1, 2) },
            ])
        );
    }

    #[test]
    fn degree_mismatch_is_empty_not_error() {
        let p = UniPoly::from_ints(&[0, 0, 1]);
        let q = UniPoly::from_ints(&[0, 0, 0, 1]);
        assert!(solve_linear_match(&p, &q).unwrap().is_empty());
        assert!(solve_linear_match(&UniPoly::from_ints(&[1]), &q).is_err());
    }

    #[test]
    fn coupled_family_needs_rational_root() {
        // p = y^3, q = 2 y^3: u = v requires v^4 = 2, irrational.
        let p = UniPoly::from_ints(&[0, 0, 0, 1]);
        let q = UniPoly::from_ints(&[0, 0, 0, 2]);
        let set = solve_linear_match(&p, &q).unwrap();
        assert!(set.coupled(1).is_empty());
        assert!(coupled_real_solution_exists(&p, &q, 1));
        assert!(!coupled_real_solution_exists(&p, &q, -1));
        // q = 16 y^3: v^4 = 16 gives v = ±2.
        let q = UniPoly::from_ints(&[0, 0, 0, 16]);
        let sols = solve_linear_match(&p, &q).unwrap().coupled(1);
        assert_eq!(sols.iter().map(|m| m.v.clone()).collect::<Vec<_>>(), vec![int(2), int(-2)]);
    }

    /// Brute force over a rational grid: `v = ±a/b`, `w = k/12`; `u` from
    /// the leading coefficients; equality tested at `deg + 1` points.
    fn brute_matches(p: &UniPoly, q: &UniPoly) -> Vec<LinearMatch> {
        let n = p.degree().unwrap();
        if q.degree() != Some(n) {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut vs = Vec::new();
        for a in 1..=4 {
            for b in 1..=4 {
                for s in [1, -1] {
                    let v = rat(s * a, b);
                    if !vs.contains(&v) {
                        vs.push(v);
                    }
                }
            }
        }
        for v in &vs {
            let u = q.leading().unwrap() / (p.leading().unwrap() * rational_pow(v, n as i32));
            for k in -48..=48 {
                let w = rat(k, 12);
                let ok = (0..=n as i64).all(|t| {
                    let y = int(t);
                    q.eval(&y) == &u * p.eval(&(v * &y + &w))
                });
                if ok {
                    out.push(LinearMatch { u: u.clone(), v: v.clone(), w });
                }
            }
        }
        out
    }

    fn small_poly() -> impl Strategy<Value = UniPoly> {
        (1usize..=4)
            .prop_flat_map(|deg| (proptest::collection::vec(-2i64..=2, deg), prop_oneof![Just(1i64), Just(-1), Just(2), Just(-2)]))
            .prop_map(|(mut cs, lead)| {
                cs.push(lead);
                UniPoly::from_ints(&cs)
            })
    }

    fn matched_pair() -> impl Strategy<Value = (UniPoly, UniPoly)> {
        (
            small_poly(),
            small_poly(),
            prop_oneof![Just(rat(1, 1)), Just(rat(-1, 1)), Just(rat(2, 1)), Just(rat(-1, 2)), Just(rat(3, 2))],
            -6i64..=6,
            prop_oneof![Just(int(1)), Just(int(-1)), Just(rat(1, 2)), Just(int(3))],
            any::<bool>(),
        )
            .prop_map(|(p, other, v, w, u, related)| {
                if related {
                    let q = p.affine_substitute(&v, &rat(w, 2)).unwrap().scale(&u);
                    (p, q)
                } else {
                    (p, other)
                }
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(96))]

        #[test]
        fn every_solution_verifies((p, q) in matched_pair()) {
            match solve_linear_match(&p, &q).unwrap() {
                LinearMatchSet::Finite(sols) => {
                    for m in sols {
                        prop_assert!(m.holds(&p, &q));
                    }
                }
                LinearMatchSet::Family(f) => {
                    for v in [int(1), int(-2), rat(1, 3)] {
                        prop_assert!(f.at(&v).unwrap().holds(&p, &q));
                    }
                }
            }
        }

        #[test]
        fn no_solution_missed_by_solver((p, q) in matched_pair()) {
            let set = solve_linear_match(&p, &q).unwrap();
            for m in brute_matches(&p, &q) {
                prop_assert!(set.contains(&m), "missed {:?} for p={} q={}", m, p, q);
            }
        }

        #[test]
        fn self_match_reproduces_self_relation(p in small_poly()) {
            prop_assume!(!p.is_constant());
            let set = solve_linear_match(&p, &p).unwrap();
            let fams = solve_self_relation(&p).unwrap();
            // Fixed triples correspond one-to-one with finite self-matches.
            for f in &fams {
                match f.triple() {
                    Some(t) => {
                        let m = LinearMatch { u: t.gamma, v: t.alpha, w: t.beta };
                        prop_assert!(set.contains(&m));
                    }
                    None => {
                        let t = f.instantiate(&int(2)).unwrap();
                        let m = LinearMatch { u: t.gamma, v: t.alpha, w: t.beta };
                        prop_assert!(set.contains(&m));
                    }
                }
            }
            if let LinearMatchSet::Finite(sols) = &set {
                let fixed: Vec<_> = fams.iter().filter_map(|f| f.triple()).collect();
                prop_assert_eq!(sols.len(), fixed.len());
                prop_assert!(fams.iter().all(|f| !matches!(f, SelfRelationFamily::ShiftedMonomial(_))));
            } else {
                prop_assert!(fams.iter().any(|f| matches!(f, SelfRelationFamily::ShiftedMonomial(_))));
            }
        }
    }
}
