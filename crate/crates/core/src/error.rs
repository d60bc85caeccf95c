use thiserror::Error;

use crate::algebra::SubspaceTag;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid letter {0:?}: words use only '0', '1' and 'z'")]
    InvalidLetter(char),

    #[error("cannot parse polynomial term {0:?}")]
    InvalidTerm(String),

    #[error("cannot parse zeta index {0:?}")]
    InvalidIndex(String),

    #[error("{op}: input is not supported on {tag}")]
    NotInSubspace { op: &'static str, tag: SubspaceTag },

    #[error("{0}: polynomial is not homogeneous")]
    NotHomogeneous(&'static str),

    #[error("weight mismatch: expected {expected}, found {found}")]
    WeightMismatch { expected: usize, found: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
