use thiserror::Error;

use crate::parse::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate substitution: scale factor is zero")]
    DegenerateSubstitution,

    #[error("parity undefined for constants")]
    ParityOfConstant,

    #[error("{0} requires a non-constant polynomial")]
    ConstantPolynomial(&'static str),

    #[error("singular change of variables")]
    SingularChange,

    #[error("map is not invertible: {0}")]
    NotInvertible(String),

    #[error("affine map, not in classification scope")]
    AffineMap,

    #[error("outside classification scope: {0}")]
    OutsideScope(String),

    #[error("no normal form: map is asymmetric and irreversible")]
    NoNormalForm,

    #[error("no closed-form fixed set: {0}")]
    NoFixedSet(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}
