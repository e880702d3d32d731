//! Detection of symmetries and reversing symmetries of a generalised
//! standard map, with explicit witnesses, the group structure they
//! generate and an affine normal form.
//!
//! Maps whose two shears are both nonlinear are handled by eight
//! conditions (`T1_*`). Maps with one affine shear use three (`T2_*`);
//! when the affine shear is `p2` the map is first transposed.

mod conditions;
mod detect;
mod normal_form;
mod structure;
mod witness;

pub use conditions::{condition_holds, ConditionId, ConditionMatch, Params};
pub use detect::{detect, detect_full, Detection};
pub use normal_form::{normal_form, NormalForm};
pub use structure::{group_structure, Generator, GroupStructure, StructureTag};
pub use witness::{build_witness, OrderInfo, Witness, WitnessKind};

use crate::error::{Error, Result};
use crate::map_algebra::{GeneralisedStandardMap, WordType};

/// Everything the classifier knows about one map.
#[derive(Debug, Clone)]
pub struct AnalysisReport {
    pub map: GeneralisedStandardMap,
    pub word_type: WordType,
    pub matches: Vec<ConditionMatch>,
    pub witnesses: Vec<Witness>,
    pub structure: GroupStructure,
    pub normal_form: Option<NormalForm>,
    pub caveats: Vec<String>,
}

impl AnalysisReport {
    pub fn reversible(&self) -> bool {
        self.matches.iter().any(|m| m.id.is_reversing())
    }

    pub fn has(&self, id: ConditionId) -> bool {
        self.matches.iter().any(|m| m.id == id)
    }

    pub fn witness(&self, id: ConditionId) -> Option<&Witness> {
        self.witnesses.iter().find(|w| w.condition == id)
    }
}

pub fn analyze(l: &GeneralisedStandardMap) -> Result<AnalysisReport> {
    let Detection {
        word_type,
        matches,
        caveats,
    } = detect_full(l)?;
    let witnesses = matches
        .iter()
        .map(|m| build_witness(m, l))
        .collect::<Result<Vec<_>>>()?;
    let structure = group_structure(&matches)?;
    let normal_form = match normal_form(l, &matches) {
        Ok(n) => Some(n),
        Err(Error::NoNormalForm) => None,
        Err(e) => return Err(e),
    };
    Ok(AnalysisReport {
        map: l.clone(),
        word_type,
        matches,
        witnesses,
        structure,
        normal_form,
        caveats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, UniPoly};
    use ConditionId::*;

    fn gsm(p1: &[i64], p2: &[i64]) -> GeneralisedStandardMap {
        GeneralisedStandardMap::new(UniPoly::from_ints(p1), UniPoly::from_ints(p2))
    }

    fn ids(r: &AnalysisReport) -> Vec<ConditionId> {
        r.matches.iter().map(|m| m.id).collect()
    }

    #[test]
    fn henon_is_reversible_only() {
        // x' = x + y, y' = y - x'^2 + x'  (area-preserving Hénon, λ = 0 form)
        let r = analyze(&gsm(&[0, 1], &[0, 1, -1])).unwrap();
        assert_eq!(r.word_type, WordType::TypeII);
        assert_eq!(ids(&r), vec![T2_R2]);
        assert_eq!(r.structure.tag, StructureTag::Dinf);
        assert!(r.reversible());
        assert!(r.witness(T2_R2).unwrap().companion.is_some());
    }

    #[test]
    fn cubic_pair_has_everything_but_s3() {
        let r = analyze(&gsm(&[0, 0, 0, 1], &[0, 0, 0, 1])).unwrap();
        assert_eq!(ids(&r), vec![T1_S1, T1_S2, T1_R1, T1_R2, T1_R5]);
        let s2 = r.matches.iter().find(|m| m.id == T1_S2).unwrap();
        assert_eq!(s2.params.a, Some(int(1)));
        assert_eq!(r.structure.tag, StructureTag::CinfTimesC2_SemidirectC2);
        assert_eq!(r.structure.presentation(), "(<S2> x <S1>) x| <R1>");
        assert_eq!(r.witness(T1_R5).unwrap().order, OrderInfo::Order4);
        assert_eq!(r.witness(T1_S2).unwrap().order, OrderInfo::SquareRootOfL);
        assert_eq!(r.normal_form.unwrap().row, T1_R5);
    }

    #[test]
    fn generic_pair_is_asymmetric() {
        let r = analyze(&gsm(&[0, 0, 1], &[0, 0, 1, 1])).unwrap();
        assert!(r.matches.is_empty());
        assert_eq!(r.structure.tag, StructureTag::Cinf);
        assert_eq!(r.structure.presentation(), "<L>");
        assert!(r.normal_form.is_none());
        assert!(!r.reversible());
    }

    #[test]
    fn equal_squares() {
        let r = analyze(&gsm(&[0, 0, 1], &[0, 0, 1])).unwrap();
        assert_eq!(ids(&r), vec![T1_S2, T1_R3, T1_R4]);
        let r4 = r.matches.iter().find(|m| m.id == T1_R4).unwrap();
        assert_eq!(r4.params.a, Some(int(-1)));
        assert_eq!(r.structure.tag, StructureTag::Dinf);
        assert_eq!(r.structure.presentation(), "<S2> x| <R3>");
    }

    #[test]
    fn odd_shears_off_centre_normalise_to_origin() {
        // p1 = (y-1)^3, p2 = (x+2)^3 + (x+2)
        let p1 = UniPoly::from_ints(&[-1, 3, -3, 1]);
        let p2 = UniPoly::from_ints(&[10, 13, 6, 1]);
        let l = GeneralisedStandardMap::new(p1, p2);
        let r = analyze(&l).unwrap();
        assert!(r.has(T1_S1));
        let nf = r.normal_form.unwrap();
        assert_eq!(nf.row, T1_S1);
        assert_eq!(nf.map.p1, UniPoly::from_ints(&[0, 0, 0, 1]));
        assert_eq!(nf.map.p2, UniPoly::from_ints(&[0, 1, 0, 1]));
    }

    #[test]
    fn transposed_affine_shear() {
        // p1 nonlinear, p2 affine.
        let l = gsm(&[0, 0, 0, 1], &[3, 2]);
        let r = analyze(&l).unwrap();
        assert_eq!(r.word_type, WordType::TypeIII);
        assert!(r.matches.iter().all(|m| m.transposed));
        assert!(r.has(T2_R2) && r.has(T2_S1));
        assert_eq!(r.structure.tag, StructureTag::DinfTimesC2);
        let nf = r.normal_form.unwrap();
        assert_eq!(nf.map.p2, UniPoly::from_ints(&[0, 1]));
    }

    #[test]
    fn out_of_scope_maps() {
        assert!(matches!(analyze(&gsm(&[0, 1], &[0, 2])), Err(Error::AffineMap)));
        assert!(matches!(analyze(&gsm(&[0, 0, 1], &[5])), Err(Error::OutsideScope(_))));
    }
}
