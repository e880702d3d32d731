use std::fmt;

use super::conditions::{ConditionId, ConditionMatch};
use crate::error::{Error, Result};

/// Isomorphism type of the reversing symmetry group.
#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StructureTag {
    Cinf,
    Dinf,
    CinfTimesC2,
    DinfTimesC2,
    CinfTimesC2_SemidirectC2,
}

impl StructureTag {
    pub fn name(self) -> &'static str {
        match self {
            Self::Cinf => "C_inf",
            Self::Dinf => "D_inf",
            Self::CinfTimesC2 => "C_inf x C_2",
            Self::DinfTimesC2 => "D_inf x C_2",
            Self::CinfTimesC2_SemidirectC2 => "(C_inf x C_2) x| C_2",
        }
    }
}

impl fmt::Display for StructureTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A generator: `L` itself or the witness of a row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    L,
    Witness(ConditionId),
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::L => f.write_str("L"),
            Self::Witness(id) => f.write_str(id.row()),
        }
    }
}

/// Reversing symmetry group `tag`, containing the symmetry group
/// `symmetry_tag` generated by `symmetry_generators` (the first one of
/// infinite order), extended by `reversing_generator` when reversible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupStructure {
    pub tag: StructureTag,
    pub symmetry_tag: StructureTag,
    pub symmetry_generators: Vec<Generator>,
    pub reversing_generator: Option<Generator>,
}

impl GroupStructure {
    fn new(tag: StructureTag, sym: Vec<Generator>, rev: Option<Generator>) -> Self {
        let symmetry_tag = if sym.len() > 1 {
            StructureTag::CinfTimesC2
        } else {
            StructureTag::Cinf
        };
        Self {
            tag,
            symmetry_tag,
            symmetry_generators: sym,
            reversing_generator: rev,
        }
    }

    /// Generators in the usual bracket notation, e.g.
    /// `(<S2> x <S1>) x| <R1>`.
    pub fn presentation(&self) -> String {
        let angle = |g: &Generator| format!("<{g}>");
        let gens = &self.symmetry_generators;
        match (self.tag, self.reversing_generator) {
            (StructureTag::Cinf, _) => angle(&gens[0]),
            (StructureTag::Dinf, Some(r)) => format!("{} x| {}", angle(&gens[0]), angle(&r)),
            (StructureTag::DinfTimesC2, Some(r)) => {
                format!("({} x| {}) x {}", angle(&gens[0]), angle(&r), angle(&gens[1]))
            }
            (StructureTag::CinfTimesC2_SemidirectC2, Some(r)) => {
                format!("({} x {}) x| {}", angle(&gens[0]), angle(&gens[1]), angle(&r))
            }
            _ => format!("{} x {}", angle(&gens[0]), angle(&gens[1])),
        }
    }
}

/// Selects the row of the group-structure tables determined by the set of
/// satisfied conditions.
pub fn group_structure(matches: &[ConditionMatch]) -> Result<GroupStructure> {
    use ConditionId::*;
    use Generator::{Witness as W, L};
    let has = |id: ConditionId| matches.iter().any(|m| m.id == id);
    let table_two = matches.iter().any(|m| ConditionId::TABLE2.contains(&m.id));

    if table_two {
        if !has(T2_R2) {
            return Err(Error::Internal("affine-shear map without its unconditional reversor".into()));
        }
        return Ok(if has(T2_S1) {
            GroupStructure::new(StructureTag::DinfTimesC2, vec![L, W(T2_S1)], Some(W(T2_R2)))
        } else {
            GroupStructure::new(StructureTag::Dinf, vec![L], Some(W(T2_R2)))
        });
    }

    let (s1, s2, s3) = (has(T1_S1), has(T1_S2), has(T1_S3));
    if s2 && s3 {
        return Err(Error::Internal("S2 and S3 matched together".into()));
    }
    let reversors: Vec<ConditionId> = [T1_R1, T1_R2, T1_R3, T1_R4, T1_R5]
        .into_iter()
        .filter(|id| has(*id))
        .collect();

    let gs = if s1 && s2 {
        GroupStructure::new(StructureTag::CinfTimesC2_SemidirectC2, vec![W(T1_S2), W(T1_S1)], Some(W(T1_R1)))
    } else if s3 {
        GroupStructure::new(StructureTag::DinfTimesC2, vec![W(T1_S3), W(T1_S1)], Some(W(T1_R1)))
    } else if s1 {
        GroupStructure::new(StructureTag::DinfTimesC2, vec![L, W(T1_S1)], Some(W(T1_R1)))
    } else if s2 {
        if reversors.is_empty() {
            GroupStructure::new(StructureTag::Cinf, vec![W(T1_S2)], None)
        } else {
            GroupStructure::new(StructureTag::Dinf, vec![W(T1_S2)], Some(W(T1_R3)))
        }
    } else {
        match reversors.as_slice() {
            [] => GroupStructure::new(StructureTag::Cinf, vec![L], None),
            [r] => GroupStructure::new(StructureTag::Dinf, vec![L], Some(W(*r))),
            _ => {
                return Err(Error::Internal(format!(
                    "several reversing rows without a symmetry: {reversors:?}"
                )))
            }
        }
    };
    // Every generator named must actually have been matched.
    for g in gs.symmetry_generators.iter().chain(gs.reversing_generator.iter()) {
        if let W(id) = g {
            if !has(*id) {
                return Err(Error::Internal(format!("structure row needs {id}, which is not matched")));
            }
        }
    }
    Ok(gs)
}
