//! The group of polynomial automorphisms of the plane as an amalgamated
//! product of affine and elementary maps: letters, reduced words, explicit
//! bivariate maps and the standard-form family.

mod affine;
mod elementary;
mod planar;
mod standard;
mod word;

pub use affine::AffineMap;
pub use elementary::ElementaryMap;
pub use planar::PlanarPolyMap;
pub use standard::{mcmillan_map, DiagonalAffine, GeneralisedStandardMap, StandardWord, WordType};
pub use word::{letter_class, GroupWord, Letter, LetterClass};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::poly::{int, rat, BiPoly, PolyPair, UniPoly};

    fn t() -> Letter {
        Letter::Affine(AffineMap::swap())
    }

    fn shear(c: &[i64]) -> Letter {
        Letter::Elementary(ElementaryMap::shear(UniPoly::from_ints(c)))
    }

    fn henon0() -> GeneralisedStandardMap {
        GeneralisedStandardMap::new(UniPoly::from_ints(&[0, -1]), UniPoly::from_ints(&[0, 2, -2]))
    }

    #[test]
    fn letter_classes() {
        assert_eq!(letter_class(&t()), LetterClass::AffineOnly);
        assert_eq!(letter_class(&shear(&[0, 0, 1])), LetterClass::ElementaryOnly);
        assert_eq!(letter_class(&shear(&[1, 3])), LetterClass::Intersection);
    }

    #[test]
    fn swap_twice_reduces_to_identity() {
        assert!(GroupWord::new(vec![t(), t()]).reduce().is_empty());
    }

    #[test]
    fn standard_word_is_already_reduced() {
        let w = GroupWord::new(vec![t(), shear(&[0, 0, 1]), t(), shear(&[0, 0, 1])]);
        let r = w.reduce();
        assert_eq!(r.len(), 4);
        assert_eq!(r, w);
        assert!(w.is_reduced());
    }

    #[test]
    fn intersection_letter_merges_with_affine() {
        let s = AffineMap::new(int(2), int(1), int(0), int(3), int(1), int(-1)).unwrap();
        let w = GroupWord::new(vec![Letter::Affine(s.clone()), t()]).reduce();
        assert_eq!(w.len(), 1);
        assert_eq!(w.evaluate(), GroupWord::single(Letter::Affine(s.compose(&AffineMap::swap()))).evaluate());
    }

    #[test]
    fn inverse_of_standard_word() {
        let e1 = ElementaryMap::shear(UniPoly::from_ints(&[0, 0, 0, 1]));
        let e2 = ElementaryMap::shear(UniPoly::from_ints(&[0, 1, 0, 1]));
        let w = GroupWord::new(vec![
            t(),
            Letter::Elementary(e2.clone()),
            t(),
            Letter::Elementary(e1.clone()),
        ]);
        let expect = GroupWord::new(vec![
            Letter::Elementary(e1.inverse()),
            t(),
            Letter::Elementary(e2.inverse()),
            t(),
        ]);
        assert_eq!(w.invert(), expect);
        assert!(w.compose(&w.invert()).is_empty());
    }

    #[test]
    fn merging_elementary_neighbours_shortens() {
        let a = GroupWord::new(vec![t(), shear(&[0, 0, 1])]);
        let b = GroupWord::new(vec![shear(&[0, 0, 0, 1]), t()]);
        let c = a.compose(&b);
        assert!(c.len() <= 3);
        assert_eq!(c.evaluate(), a.evaluate().compose(&b.evaluate()));
    }

    #[test]
    fn cyclic_reduction_examples() {
        let w = GroupWord::new(vec![t(), shear(&[0, 0, 1]), t(), shear(&[0, 0, 1])]);
        let (u, h) = w.cyclic_reduce();
        assert!(u.is_empty());
        assert_eq!(h, w);

        // Type II: t · e2 · q1 starts and ends with affine letters.
        let sw = henon0().word_of_standard_form().unwrap();
        assert_eq!(sw.word_type, WordType::TypeII);
        let (u, h) = sw.word.cyclic_reduce();
        assert!(h.is_cyclically_reduced());
        assert_eq!(h.len(), 2);
        let back = u.compose(&h).compose(&u.invert());
        assert_eq!(back.evaluate(), sw.word.evaluate());

        let single = GroupWord::single(t());
        let (u, h) = single.cyclic_reduce();
        assert!(u.is_empty());
        assert_eq!(h, single);
    }

    #[test]
    fn word_types() {
        let cube = GeneralisedStandardMap::new(UniPoly::from_ints(&[0, 0, 0, 1]), UniPoly::from_ints(&[0, 0, 0, 1]));
        let sw = cube.word_of_standard_form().unwrap();
        assert_eq!(sw.to_string(), "TypeI: t · e2 · t · e1");
        assert_eq!(sw.word.len(), 4);

        let m = GeneralisedStandardMap::new(UniPoly::from_ints(&[0, 0, 1]), UniPoly::from_ints(&[0, 1]));
        assert_eq!(m.word_type().unwrap(), WordType::TypeIII);
        let m = GeneralisedStandardMap::new(UniPoly::from_ints(&[0, 0, 1]), UniPoly::from_ints(&[2]));
        assert_eq!(m.word_type().unwrap(), WordType::TypeIV);
        let m = GeneralisedStandardMap::new(UniPoly::from_ints(&[0, 1]), UniPoly::from_ints(&[0, 2]));
        assert_eq!(m.word_type(), Err(Error::AffineMap));
    }

    #[test]
    fn words_evaluate_to_the_map() {
        for (p1, p2) in [
            (vec![0, 0, 0, 1], vec![0, 0, 0, 1]),
            (vec![0, -1], vec![0, 2, -2]),
            (vec![1, 0, 1], vec![3, 1]),
            (vec![0, 0, 1], vec![-2]),
        ] {
            let m = GeneralisedStandardMap::new(UniPoly::from_ints(&p1), UniPoly::from_ints(&p2));
            let sw = m.word_of_standard_form().unwrap();
            assert_eq!(sw.word.evaluate(), m.to_planar(), "{m}");
            assert_eq!(m.to_planar().jacobian(), BiPoly::one());
        }
    }

    #[test]
    fn henon_forward_components() {
        // x' = x - y, y' = y + 2(x - y) - 2(x - y)^2
        let f = henon0().to_planar();
        let xm = &BiPoly::x() - &BiPoly::y();
        let y = &(&BiPoly::y() + &xm.scale(&int(2))) - &(&xm * &xm).scale(&int(2));
        assert_eq!(f.forward(), &PolyPair::new(xm, y));
        assert!(f.compose(&f.inverse()).is_identity());
    }

    #[test]
    fn square_shears_give_degree_four() {
        let m = GeneralisedStandardMap::new(UniPoly::from_ints(&[0, 0, 1]), UniPoly::from_ints(&[0, 0, 1]));
        assert_eq!(m.word_of_standard_form().unwrap().word.evaluate().total_degree(), 4);
    }

    #[test]
    fn affine_conjugation_matches_composition() {
        let m = GeneralisedStandardMap::new(UniPoly::from_ints(&[1, 0, 2, 1]), UniPoly::from_ints(&[0, -1, 1]));
        let t = DiagonalAffine::new(rat(1, 2), int(3), int(-2), rat(1, 3)).unwrap();
        let c = m.conjugate_by_affine(&t).unwrap();
        let tp = t.to_planar();
        let expect = tp.compose(&m.to_planar()).compose(&tp.inverse());
        assert_eq!(c.to_planar(), expect);
        assert_eq!(m.conjugate_by_affine(&DiagonalAffine::identity()).unwrap(), m);
        assert_eq!(
            DiagonalAffine::new(int(0), int(0), int(1), int(0)),
            Err(Error::SingularChange)
        );
    }

    #[test]
    fn odd_shift_normalises_to_origin() {
        // p1 odd about e/2 = 2, p2 odd about c/2 = 1
        let p1 = UniPoly::from_ints(&[0, 1, 0, 1]).affine_substitute(&int(1), &int(-2)).unwrap();
        let p2 = UniPoly::from_ints(&[0, 0, 0, 3]).affine_substitute(&int(1), &int(-1)).unwrap();
        let m = GeneralisedStandardMap::new(p1, p2);
        let t = DiagonalAffine::new(int(1), int(-1), int(1), int(-2)).unwrap();
        let n = m.conjugate_by_affine(&t).unwrap();
        assert_eq!(n.p1, UniPoly::from_ints(&[0, 1, 0, 1]));
        assert_eq!(n.p2, UniPoly::from_ints(&[0, 0, 0, 3]));
    }

    #[test]
    fn mcmillan_conversion() {
        let f = UniPoly::from_ints(&[0, 0, 2]);
        let m = GeneralisedStandardMap::from_mcmillan(&f);
        assert_eq!(m, henon0());
        let cubic = GeneralisedStandardMap::from_mcmillan(&UniPoly::from_ints(&[0, 0, 0, 1]));
        assert_eq!(cubic.p2, UniPoly::from_ints(&[0, 2, 0, -1]));
        let zero = GeneralisedStandardMap::from_mcmillan(&UniPoly::zero());
        assert_eq!(zero.p2, UniPoly::from_ints(&[0, 2]));
        // Conjugacy by (x, y) -> (x, x - y).
        let c = PlanarPolyMap::new(
            PolyPair::new(BiPoly::x(), &BiPoly::x() - &BiPoly::y()),
            PolyPair::new(BiPoly::x(), &BiPoly::x() - &BiPoly::y()),
        )
        .unwrap();
        let mc = mcmillan_map(&f);
        assert_eq!(c.compose(&mc).compose(&c.inverse()), m.to_planar());
    }
}
