//! Seeded random maps, row instances and words for tests, benches and
//! `analyze --random`.

use rand::Rng;

use crate::classifier::ConditionId;
use crate::map_algebra::{AffineMap, ElementaryMap, GeneralisedStandardMap, GroupWord, Letter};
use crate::poly::{int, rat, Parity, Rational, UniPoly};

pub use rand::SeedableRng;
pub use rand_chacha::ChaCha8Rng as CorpusRng;

pub fn rng(seed: u64) -> CorpusRng {
    CorpusRng::seed_from_u64(seed)
}

fn coeff<R: Rng>(rng: &mut R) -> i64 {
    rng.random_range(-3..=3)
}

fn nonzero<R: Rng>(rng: &mut R) -> i64 {
    loop {
        let c = coeff(rng);
        if c != 0 {
            return c;
        }
    }
}

/// Coefficients in `{-3..3}`, leading one nonzero.
pub fn random_poly<R: Rng>(rng: &mut R, degree: usize) -> UniPoly {
    let mut cs: Vec<i64> = (0..degree).map(|_| coeff(rng)).collect();
    cs.push(nonzero(rng));
    UniPoly::from_ints(&cs)
}

/// `Σ c_k (y - m)^k` over the powers allowed by `parity`, with the top
/// power `degree` present.
pub fn centred_poly<R: Rng>(rng: &mut R, center: &Rational, degree: usize, parity: Option<Parity>) -> UniPoly {
    let base = UniPoly::linear(-center.clone(), int(1));
    let mut acc = UniPoly::zero();
    for k in 0..=degree {
        let allowed = match parity {
            Some(Parity::Odd) => k % 2 == 1,
            Some(Parity::Even) => k % 2 == 0,
            None => true,
        };
        if !allowed {
            continue;
        }
        let c = if k == degree { nonzero(rng) } else { coeff(rng) };
        acc = &acc + &base.pow(k as u32).scale(&int(c));
    }
    acc
}

fn center<R: Rng>(rng: &mut R) -> Rational {
    rat(rng.random_range(-4..=4), 2)
}

fn scale<R: Rng>(rng: &mut R) -> Rational {
    const CHOICES: [(i64, i64); 8] = [(1, 1), (-1, 1), (2, 1), (-2, 1), (1, 2), (-1, 2), (3, 1), (-1, 3)];
    let (n, d) = CHOICES[rng.random_range(0..CHOICES.len())];
    rat(n, d)
}

fn odd_degree<R: Rng>(rng: &mut R) -> usize {
    [3, 5][rng.random_range(0..2)]
}

fn even_degree<R: Rng>(rng: &mut R) -> usize {
    [2, 4, 6][rng.random_range(0..3)]
}

fn any_degree<R: Rng>(rng: &mut R) -> usize {
    rng.random_range(2..=6)
}

/// `sign/a · p(y/a + shift)`.
fn rescaled(p: &UniPoly, a: &Rational, shift: &Rational, sign: i64) -> UniPoly {
    p.affine_substitute(&a.recip(), shift)
        .expect("nonzero scale")
        .scale(&(a.recip() * int(sign)))
}

/// A map satisfying the condition of `row`, both shears of degree at most
/// six. Rows of the affine-shear table come out transposed (`p2` affine)
/// about half the time.
pub fn row_instance<R: Rng>(rng: &mut R, row: ConditionId) -> GeneralisedStandardMap {
    use ConditionId::*;
    let odd = Some(Parity::Odd);
    let even = Some(Parity::Even);
    let (p1, p2) = match row {
        T1_S1 => {
            let (m1, m2) = (center(rng), center(rng));
            let (d1, d2) = (odd_degree(rng), odd_degree(rng));
            (centred_poly(rng, &m1, d1, odd), centred_poly(rng, &m2, d2, odd))
        }
        T1_S2 | T1_R4 => {
            let d = any_degree(rng);
            let m = center(rng);
            let p1 = centred_poly(rng, &m, d, None);
            let (a, e) = (scale(rng), center(rng));
            let sign = if row == T1_S2 { 1 } else { -1 };
            let p2 = rescaled(&p1, &a, &e, sign);
            (p1, p2)
        }
        T1_S3 | T1_R5 => {
            let m = center(rng);
            let d = odd_degree(rng);
            let p1 = centred_poly(rng, &m, d, odd);
            let (a, c) = (scale(rng), center(rng));
            let sign = if row == T1_S3 { -1 } else { 1 };
            let p2 = rescaled(&p1, &a, &-(&c / &a), sign);
            (p1, p2)
        }
        T1_R1 => {
            let (d1, d2) = (any_degree(rng), odd_degree(rng));
            let m = center(rng);
            (random_poly(rng, d1), centred_poly(rng, &m, d2, odd))
        }
        T1_R2 => {
            let (d1, d2) = (odd_degree(rng), any_degree(rng));
            let m = center(rng);
            (centred_poly(rng, &m, d1, odd), random_poly(rng, d2))
        }
        T1_R3 => {
            let (m1, m2) = (center(rng), center(rng));
            let (d1, d2) = (even_degree(rng), even_degree(rng));
            (centred_poly(rng, &m1, d1, even), centred_poly(rng, &m2, d2, even))
        }
        T2_S1 | T2_R1 | T2_R2 => {
            let p1 = UniPoly::from_ints(&[coeff(rng), nonzero(rng)]);
            let p2 = if row == T2_R2 {
                let d = any_degree(rng);
                random_poly(rng, d)
            } else {
                let (m, d) = (center(rng), odd_degree(rng));
                centred_poly(rng, &m, d, odd)
            };
            if rng.random_bool(0.5) {
                // L and t·M⁻¹·t share their rows for M = (-p2, -p1).
                (-&p2, -&p1)
            } else {
                (p1, p2)
            }
        }
    };
    GeneralisedStandardMap::new(p1, p2)
}

/// Both shears of degree in `2..=max_degree`, coefficients in `{-3..3}`.
pub fn random_map<R: Rng>(rng: &mut R, max_degree: usize) -> GeneralisedStandardMap {
    let max_degree = max_degree.max(2);
    let d1 = rng.random_range(2..=max_degree);
    let d2 = rng.random_range(2..=max_degree);
    GeneralisedStandardMap::new(random_poly(rng, d1), random_poly(rng, d2))
}

/// Every polynomial of degree 2 or 3 with coefficients in `{-1, 0, 1}` and
/// nonzero leading coefficient (72 of them).
pub fn small_polys() -> Vec<UniPoly> {
    let mut out = Vec::new();
    for degree in 2..=3usize {
        let lower = 3usize.pow(degree as u32);
        for lead in [-1, 1] {
            for code in 0..lower {
                let mut cs: Vec<i64> = (0..degree).map(|k| (code / 3usize.pow(k as u32) % 3) as i64 - 1).collect();
                cs.push(lead);
                out.push(UniPoly::from_ints(&cs));
            }
        }
    }
    out
}

/// All pairs drawn from [`small_polys`].
pub fn small_corpus() -> Vec<GeneralisedStandardMap> {
    let polys = small_polys();
    let mut out = Vec::with_capacity(polys.len() * polys.len());
    for p1 in &polys {
        for p2 in &polys {
            out.push(GeneralisedStandardMap::new(p1.clone(), p2.clone()));
        }
    }
    out
}

fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    rat(rng.random_range(-2..=2), rng.random_range(1..=2))
}

fn nonzero_rational<R: Rng>(rng: &mut R) -> Rational {
    rat(nonzero(rng).signum() * rng.random_range(1..=2), rng.random_range(1..=2))
}

pub fn random_letter<R: Rng>(rng: &mut R) -> Letter {
    if rng.random_bool(0.5) {
        loop {
            let m = AffineMap::new(
                small_rational(rng),
                small_rational(rng),
                small_rational(rng),
                small_rational(rng),
                small_rational(rng),
                small_rational(rng),
            );
            if let Ok(m) = m {
                return Letter::Affine(m);
            }
        }
    } else {
        let degree = rng.random_range(0..=3);
        let p = random_poly(rng, degree);
        let e = ElementaryMap::new(nonzero_rational(rng), p, nonzero_rational(rng), small_rational(rng))
            .expect("nonzero scales");
        Letter::Elementary(e)
    }
}

/// `len` independent random letters, not reduced.
pub fn random_word<R: Rng>(rng: &mut R, len: usize) -> GroupWord {
    GroupWord::new((0..len).map(|_| random_letter(rng)).collect())
}
