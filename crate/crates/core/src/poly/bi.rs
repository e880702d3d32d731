use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{rational_string, rational_to_f64, Rational, UniPoly};

/// Bivariate polynomial in `x, y` with rational coefficients. Keys are
/// exponent pairs `(i, j)` for `x^i y^j`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, 0, 0)
    }

    pub fn term(c: Rational, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        Self { terms }
    }

    pub fn x() -> Self {
        Self::term(Rational::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::term(Rational::one(), 0, 1)
    }

    /// `p(x)`.
    pub fn from_uni_x(p: &UniPoly) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| ((k as u32, 0), c.clone())),
        )
    }

    /// `p(y)`.
    pub fn from_uni_y(p: &UniPoly) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| ((0, k as u32), c.clone())),
        )
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), Rational)>) -> Self {
        let mut out = BTreeMap::new();
        for (k, c) in terms {
            let slot: &mut Rational = out.entry(k).or_insert_with(Rational::zero);
            *slot += c;
        }
        out.retain(|_, c: &mut Rational| !c.is_zero());
        Self { terms: out }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|(i, _)| *i).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|(_, j)| *j).max()
    }

    /// The value if this is a constant (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    /// The polynomial as a function of `x` alone, if `y` does not occur.
    pub fn as_uni_x(&self) -> Option<UniPoly> {
        if self.terms.keys().any(|(_, j)| *j != 0) {
            return None;
        }
        Some(self.coefficients_in_y(0))
    }

    /// The polynomial as a function of `y` alone, if `x` does not occur.
    pub fn as_uni_y(&self) -> Option<UniPoly> {
        if self.terms.keys().any(|(i, _)| *i != 0) {
            return None;
        }
        Some(self.coefficients_in_x(0))
    }

    /// `F_j(x)` in `F = sum_j y^j F_j(x)`.
    pub fn coefficients_in_y(&self, j: u32) -> UniPoly {
        let n = self.degree_x().unwrap_or(0) as usize;
        let mut c = vec![Rational::zero(); n + 1];
        for ((a, b), v) in &self.terms {
            if *b == j {
                c[*a as usize] = v.clone();
            }
        }
        UniPoly::from_coeffs(c)
    }

    /// `G_i(y)` in `F = sum_i x^i G_i(y)`.
    pub fn coefficients_in_x(&self, i: u32) -> UniPoly {
        let n = self.degree_y().unwrap_or(0) as usize;
        let mut c = vec![Rational::zero(); n + 1];
        for ((a, b), v) in &self.terms {
            if *a == i {
                c[*b as usize] = v.clone();
            }
        }
        UniPoly::from_coeffs(c)
    }

    /// All `G_i(y)`, indexed by the power of `x`.
    pub fn x_coefficients(&self) -> Vec<UniPoly> {
        match self.degree_x() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|i| self.coefficients_in_x(i)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Univariate `p` evaluated at this polynomial, `p(self)`.
    pub fn apply_uni(&self, p: &UniPoly) -> Self {
        p.coeffs().iter().rev().fold(Self::zero(), |acc, c| {
            let mut next = &acc * self;
            next.add_constant(c);
            next
        })
    }

    fn add_constant(&mut self, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((0, 0)).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(0, 0));
        }
    }

    /// `self(px, py)`: substitute `x -> px`, `y -> py`.
    pub fn compose(&self, px: &BiPoly, py: &BiPoly) -> Self {
        // Horner in x over the y-coefficient polynomials G_i, each evaluated
        // at py by Horner as well.
        let rows = self.x_coefficients();
        let mut acc = Self::zero();
        for g in rows.iter().rev() {
            acc = &acc * px;
            acc = &acc + &py.apply_uni(g);
        }
        acc
    }

    pub fn derivative_x(&self) -> Self {
        Self::from_terms(self.terms.iter().filter(|((i, _), _)| *i > 0).map(|((i, j), c)| {
            ((i - 1, *j), c * Rational::from_integer(BigInt::from(*i)))
        }))
    }

    pub fn derivative_y(&self) -> Self {
        Self::from_terms(self.terms.iter().filter(|((_, j), _)| *j > 0).map(|((i, j), c)| {
            ((*i, j - 1), c * Rational::from_integer(BigInt::from(*j)))
        }))
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, ((i, j), c)| {
            acc + c * super::rational_pow(x, *i as i32) * super::rational_pow(y, *j as i32)
        })
    }

    pub fn eval_f64(&self, x: f64, y: f64) -> f64 {
        self.terms.iter().fold(0.0, |acc, ((i, j), c)| {
            acc + rational_to_f64(c) * x.powi(*i as i32) * y.powi(*j as i32)
        })
    }

    /// Swaps the roles of `x` and `y`.
    pub fn swap_vars(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|((i, j), c)| ((*j, *i), c.clone())).collect(),
        }
    }

    /// Integer numerators over a common denominator.
    fn integer_terms(&self) -> (BigInt, Vec<((u32, u32), BigInt)>) {
        let den = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = self
            .terms
            .iter()
            .map(|(k, c)| (*k, c.numer() * (&den / c.denom())))
            .collect();
        (den, ints)
    }

    /// Human-readable form, graded by total degree (highest first). Re-parses
    /// to the same polynomial.
    pub fn display_in(&self, xv: &str, yv: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by(|a, b| (b.0 + b.1).cmp(&(a.0 + a.1)).then(b.0.cmp(&a.0)));
        let mut out = String::new();
        for k in keys {
            let c = &self.terms[&k];
            let negative = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            match k.0 {
                0 => {}
                1 => factors.push(xv.to_string()),
                n => factors.push(format!("{xv}^{n}")),
            }
            match k.1 {
                0 => {}
                1 => factors.push(yv.to_string()),
                n => factors.push(format!("{yv}^{n}")),
            }
            if factors.is_empty() || !mag.is_one() {
                factors.insert(0, rational_string(&mag));
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x", "y"))
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let (big, small) = if self.terms.len() >= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut terms = big.terms.clone();
        for (k, c) in &small.terms {
            let slot = terms.entry(*k).or_insert_with(Rational::zero);
            *slot += c;
            if slot.is_zero() {
                terms.remove(k);
            }
        }
        BiPoly { terms }
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &(-rhs)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        if let Some(c) = rhs.as_constant() {
            return self.scale(&c);
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale(&c);
        }
        // Multiply integer numerators into a dense grid, divide once at the end.
        let (da, ia) = self.integer_terms();
        let (db, ib) = rhs.integer_terms();
        let dx = self.degree_x().unwrap() + rhs.degree_x().unwrap();
        let dy = (self.degree_y().unwrap() + rhs.degree_y().unwrap()) as usize;
        let width = dy + 1;
        let mut grid = vec![BigInt::zero(); (dx as usize + 1) * width];
        for ((ai, aj), a) in &ia {
            for ((bi, bj), b) in &ib {
                let idx = (ai + bi) as usize * width + (aj + bj) as usize;
                grid[idx] += a * b;
            }
        }
        let den = da * db;
        let terms = grid
            .into_iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(idx, v)| {
                let key = ((idx / width) as u32, (idx % width) as u32);
                (key, Rational::new(v, den.clone()))
            })
            .collect();
        BiPoly { terms }
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: BiPoly) -> BiPoly {
        &self + &rhs
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: BiPoly) -> BiPoly {
        &self - &rhs
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

/// Components `(x', y')` of a polynomial map of the plane.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PolyPair {
    pub x: BiPoly,
    pub y: BiPoly,
}

impl PolyPair {
    pub fn new(x: BiPoly, y: BiPoly) -> Self {
        Self { x, y }
    }

    pub fn identity() -> Self {
        Self::new(BiPoly::x(), BiPoly::y())
    }

    pub fn is_identity(&self) -> bool {
        self.x == BiPoly::x() && self.y == BiPoly::y()
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn after(&self, inner: &PolyPair) -> PolyPair {
        PolyPair::new(
            self.x.compose(&inner.x, &inner.y),
            self.y.compose(&inner.x, &inner.y),
        )
    }

    /// `t ∘ self ∘ t` for the swap `t: (x, y) -> (y, x)`.
    pub fn conjugate_by_swap(&self) -> PolyPair {
        PolyPair::new(self.y.swap_vars(), self.x.swap_vars())
    }

    pub fn jacobian_determinant(&self) -> BiPoly {
        &(&self.x.derivative_x() * &self.y.derivative_y())
            - &(&self.x.derivative_y() * &self.y.derivative_x())
    }

    pub fn total_degree(&self) -> u32 {
        self.x
            .total_degree()
            .unwrap_or(0)
            .max(self.y.total_degree().unwrap_or(0))
    }

    pub fn eval_f64(&self, x: f64, y: f64) -> (f64, f64) {
        (self.x.eval_f64(x, y), self.y.eval_f64(x, y))
    }
}

impl fmt::Display for PolyPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x -> {}, y -> {}", self.x, self.y)
    }
}
