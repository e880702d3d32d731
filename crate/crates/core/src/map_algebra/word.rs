use std::fmt;

use super::{AffineMap, ElementaryMap, PlanarPolyMap};
use crate::poly::PolyPair;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Letter {
    Affine(AffineMap),
    Elementary(ElementaryMap),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LetterClass {
    AffineOnly,
    ElementaryOnly,
    Intersection,
}

impl fmt::Display for LetterClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::AffineOnly => "A",
            Self::ElementaryOnly => "E",
            Self::Intersection => "I",
        })
    }
}

pub fn letter_class(g: &Letter) -> LetterClass {
    match g {
        Letter::Affine(a) if a.in_intersection() => LetterClass::Intersection,
        Letter::Affine(_) => LetterClass::AffineOnly,
        Letter::Elementary(e) if e.in_intersection() => LetterClass::Intersection,
        Letter::Elementary(_) => LetterClass::ElementaryOnly,
    }
}

impl Letter {
    pub fn class(&self) -> LetterClass {
        letter_class(self)
    }

    pub fn inverse(&self) -> Letter {
        match self {
            Letter::Affine(a) => Letter::Affine(a.inverse()),
            Letter::Elementary(e) => Letter::Elementary(e.inverse()),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            Letter::Affine(a) => a.is_identity(),
            Letter::Elementary(e) => e.is_identity(),
        }
    }

    pub fn to_poly_pair(&self) -> PolyPair {
        match self {
            Letter::Affine(a) => a.to_poly_pair(),
            Letter::Elementary(e) => e.to_poly_pair(),
        }
    }

    fn as_affine(&self) -> Option<AffineMap> {
        match self {
            Letter::Affine(a) => Some(a.clone()),
            Letter::Elementary(e) => e.to_affine(),
        }
    }

    fn as_elementary(&self) -> Option<ElementaryMap> {
        match self {
            Letter::Affine(a) => a.to_elementary(),
            Letter::Elementary(e) => Some(e.clone()),
        }
    }

    /// `self ∘ inner` when both lie in a common factor.
    fn merge(&self, inner: &Letter) -> Option<Letter> {
        let same_affine = self.as_affine().zip(inner.as_affine());
        let same_elementary = self.as_elementary().zip(inner.as_elementary());
        let prefer_affine = matches!(self, Letter::Affine(_)) || matches!(inner, Letter::Affine(_));
        match (same_affine, same_elementary) {
            (Some((a, b)), Some((c, d))) => Some(if prefer_affine {
                Letter::Affine(a.compose(&b))
            } else {
                Letter::Elementary(c.compose(&d))
            }),
            (Some((a, b)), None) => Some(Letter::Affine(a.compose(&b))),
            (None, Some((c, d))) => Some(Letter::Elementary(c.compose(&d))),
            (None, None) => None,
        }
    }
}

/// A word `g_n ∘ … ∘ g_1` stored in written order: `letters[0]` is applied
/// last.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GroupWord {
    letters: Vec<Letter>,
}

impl GroupWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Self { letters }
    }

    pub fn single(letter: Letter) -> Self {
        Self { letters: vec![letter] }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn pattern(&self) -> Vec<LetterClass> {
        self.letters.iter().map(letter_class).collect()
    }

    /// Alternating letters outside the intersection, or a single letter.
    pub fn is_reduced(&self) -> bool {
        if self.letters.len() <= 1 {
            return self.letters.first().is_none_or(|l| !l.is_identity());
        }
        let p = self.pattern();
        p.iter().all(|c| *c != LetterClass::Intersection) && p.windows(2).all(|w| w[0] != w[1])
    }

    /// Reduced word with canonical coset representatives: every letter but
    /// the rightmost is `(κx + y, x)` or `(x + p̂(y), y)` with `p̂` free of
    /// terms of degree below two. A lone intersection letter is stored as
    /// affine.
    pub fn reduce(&self) -> GroupWord {
        // Stack invariant: alternating letters outside the intersection,
        // except possibly a lone bottom letter.
        let mut stack: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for letter in &self.letters {
            let mut cur = letter.clone();
            loop {
                if cur.is_identity() {
                    break;
                }
                match stack.last() {
                    Some(top) if mergeable(top, &cur) => {
                        let top = stack.pop().expect("nonempty");
                        cur = top.merge(&cur).expect("letters share a factor");
                    }
                    _ => {
                        stack.push(cur);
                        break;
                    }
                }
            }
        }
        canonicalize(stack)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GroupWord) -> GroupWord {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        GroupWord::new(letters).reduce()
    }

    pub fn invert(&self) -> GroupWord {
        GroupWord::new(self.letters.iter().rev().map(Letter::inverse).collect())
    }

    /// `(u, h)` with `self = u ∘ h ∘ u⁻¹` and `h` cyclically reduced.
    pub fn cyclic_reduce(&self) -> (GroupWord, GroupWord) {
        let mut h = self.reduce();
        let mut u = GroupWord::identity();
        while h.len() >= 2 && same_factor(&h.letters[0], &h.letters[h.len() - 1]) {
            let g = GroupWord::single(h.letters[0].clone());
            // h = g ∘ (g⁻¹ ∘ h ∘ g) ∘ g⁻¹
            h = g.invert().compose(&h).compose(&g);
            u = u.compose(&g);
        }
        (u, h)
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.len() <= 1 || !same_factor(&self.letters[0], &self.letters[self.len() - 1])
    }

    /// Explicit forward and inverse maps.
    pub fn evaluate(&self) -> PlanarPolyMap {
        PlanarPolyMap::from_parts_unchecked(eval_pairs(&self.letters), eval_pairs(&self.invert().letters))
    }
}

fn mergeable(a: &Letter, b: &Letter) -> bool {
    let (ca, cb) = (letter_class(a), letter_class(b));
    ca == cb || ca == LetterClass::Intersection || cb == LetterClass::Intersection
}

fn same_factor(a: &Letter, b: &Letter) -> bool {
    matches!(
        (letter_class(a), letter_class(b)),
        (LetterClass::AffineOnly, LetterClass::AffineOnly)
            | (LetterClass::ElementaryOnly, LetterClass::ElementaryOnly)
    )
}

fn eval_pairs(letters: &[Letter]) -> PolyPair {
    // Substitute the accumulated inner map into each simple outer letter.
    letters
        .iter()
        .rev()
        .fold(PolyPair::identity(), |acc, g| g.to_poly_pair().after(&acc))
}

fn canonicalize(mut letters: Vec<Letter>) -> GroupWord {
    if letters.len() == 1 {
        if let Some(a) = letters[0].as_affine() {
            letters[0] = Letter::Affine(a);
        }
        return GroupWord { letters };
    }
    for i in 0..letters.len().saturating_sub(1) {
        let (rep, residual) = match &letters[i] {
            Letter::Affine(a) => {
                let (r, s) = a.coset_split();
                (Letter::Affine(r), Letter::Affine(s))
            }
            Letter::Elementary(e) => {
                let (r, s) = e.coset_split();
                (Letter::Elementary(r), Letter::Elementary(s))
            }
        };
        letters[i] = rep;
        letters[i + 1] = residual.merge(&letters[i + 1]).expect("residual is in the intersection");
    }
    GroupWord { letters }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("id");
        }
        let parts: Vec<String> = self.pattern().iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(" · "))
    }
}
