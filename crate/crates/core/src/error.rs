use thiserror::Error;

use crate::braid::Atom;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("braid groups need at least 2 strands, got {0}")]
    TooFewStrands(usize),

    #[error("this operation needs at least 3 strands, got {0}")]
    NeedThreeStrands(usize),

    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: i64, strands: usize },

    #[error("atom {atom} is not valid on {strands} strands")]
    InvalidAtom { atom: Atom, strands: usize },

    #[error("atom {0} is outside the allowed alphabet")]
    ForeignAtom(Atom),

    #[error("malformed token `{0}`")]
    Parse(String),

    #[error("braid is not pure")]
    NotPure,

    #[error("braid is not quasitoric")]
    NotQuasitoric,

    #[error("unsupported: {0}")]
    Unsupported(&'static str),
}

pub type Result<T> = std::result::Result<T, BraidError>;
