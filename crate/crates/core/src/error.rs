use thiserror::Error;

use crate::sequence::{AlphaSequence, SetKind};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("meet undefined: {0} and {1} are related by a proper left factor")]
    PrefixAmbiguity(AlphaSequence, AlphaSequence),

    #[error("index {index} out of range for a sequence of length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("undefined: {0}")]
    Undefined(&'static str),

    #[error("invalid n = {0}")]
    InvalidN(u64),

    #[error("cell {index} of {seq} has value 1 and cannot be split")]
    NotSplittable { seq: AlphaSequence, index: usize },

    #[error("cell {index} of {seq} cannot be conjugated")]
    NotConjugatable { seq: AlphaSequence, index: usize },

    #[error("maximal element: {0} has no successor")]
    Maximal(AlphaSequence),

    #[error("minimal element: {0} has no predecessor")]
    Minimal(AlphaSequence),

    #[error("no elementary operation on {0} yields a lexical sequence")]
    NoCandidate(AlphaSequence),

    #[error("{seq} is not a member of {kind}_{n}")]
    NotMember { seq: AlphaSequence, kind: SetKind, n: u64 },

    #[error("{0} is not in the given list")]
    NotInList(AlphaSequence),

    #[error("{0} admits no g-hat decomposition")]
    NoDecomposition(AlphaSequence),

    #[error("invalid seed {seq} for A_{n}")]
    InvalidSeed { seq: AlphaSequence, n: u64 },

    #[error("n = {n} exceeds the configured cap of {cap}")]
    CapExceeded { n: u64, cap: u64 },

    #[error("cannot parse sequence {0:?}")]
    Parse(String),
}
