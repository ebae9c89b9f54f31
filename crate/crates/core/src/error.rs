use thiserror::Error;

use crate::Nat;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("support must contain at least one natural")]
    EmptySupport,

    #[error("explicit support element {element} is not below the tail threshold {tail}")]
    TailOverlap { element: Nat, tail: Nat },

    #[error("{0} does not belong to the family support")]
    NotInSupport(Nat),

    #[error("invalid element {0} for this family")]
    InvalidElement(String),

    #[error("index {index} out of range for a support of {len} elements")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("translation by {0} produces a negative support element")]
    NegativeTranslation(i64),

    #[error("{0} is not in the restricted subsemigroup")]
    NotRestricted(String),

    #[error("families are not translates of each other")]
    NotTranslateEquivalent,

    #[error("{0} is not an idempotent")]
    NotIdempotent(String),

    #[error("duplicate member {0} in general family")]
    DuplicateMember(String),

    #[error("general family is not omega-closed")]
    NotOmegaClosed,

    #[error("set {0} is not a member of the general family")]
    NotAMember(String),

    #[error("invalid M-sequence: {0}")]
    InvalidSequence(String),

    #[error("neighbourhood index {index} outside 1..={len}")]
    NeighbourhoodIndex { index: usize, len: usize },

    #[error("the zero element is not allowed here")]
    ZeroNotAllowed,
}

impl Error {
    /// True for errors caused by malformed text rather than by a well-formed
    /// value that is invalid for the family.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}
