use thiserror::Error;

use crate::word::{Parikh, Word};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `position` is 1-based.
    #[error("invalid symbol {found:?} at position {position}, expected '0' or '1'")]
    Parse { position: usize, found: char },

    #[error("slope of the empty word is undefined")]
    UndefinedSlope,

    #[error("Parikh vector (0,0) does not determine a Christoffel word")]
    ZeroParikh,

    #[error("Parikh vector {0} is not coprime")]
    NotCoprime(Parikh),

    #[error("Parikh vector {0} has a zero component")]
    ZeroComponent(Parikh),

    #[error("operation requires a nonempty word")]
    EmptyWord,

    #[error("{0} is not a Lyndon word of length at least 2")]
    NotLyndon(Word),

    #[error("{0} is not a central word")]
    NotCentral(Word),

    #[error("{0} is not a primitive lower Christoffel word")]
    NotChristoffel(Word),

    #[error("{0} is not digitally convex")]
    NotConvex(Word),

    #[error("words have different lengths ({0} and {1})")]
    LengthMismatch(usize, usize),

    #[error("words have different Parikh vectors ({0} and {1})")]
    ParikhMismatch(Parikh, Parikh),

    #[error("position {position} is not a valid {kind} site of {word}")]
    InvalidSite {
        word: Word,
        position: usize,
        kind: &'static str,
    },

    #[error("input size {size} exceeds the cap {cap}")]
    CapExceeded { size: usize, cap: usize },

    #[error("argument must be positive")]
    NonPositive,
}
