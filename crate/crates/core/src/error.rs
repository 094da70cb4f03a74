use thiserror::Error;

use crate::word::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid letter {0:?}: letters must be printable non-whitespace characters")]
    InvalidLetter(char),
    #[error("duplicate letter {0:?} in alphabet")]
    DuplicateLetter(char),
    #[error("alphabet must contain at least one letter")]
    EmptyAlphabet,
    #[error(
        "factor indices out of range: i = {i}, j = {j}, |w| = {len} (need 0 <= i-1 <= j <= |w|)"
    )]
    IndexOutOfRange { i: usize, j: usize, len: usize },
    #[error("operation requires a non-empty word")]
    EmptyWord,
    #[error("k must be at least {min}, got {k}")]
    InvalidK { k: usize, min: usize },
    #[error("threshold must be greater than 1, got {0}")]
    InvalidThreshold(Rational),
    #[error("word length {len} is not a positive multiple of {k}")]
    NotMultiple { len: usize, k: usize },
    #[error("letter {letter:?} at position {position} is not in the domain")]
    NotInDomain { letter: char, position: usize },
    #[error("not an endomorphism: codomain letter {0:?} is outside the domain")]
    NotEndomorphism(char),
    #[error("letter {0:?} is not prolongable (its image must start with it and have length >= 2)")]
    NotProlongable(char),
    #[error("fixed point from {letter:?} is finite ({len} letters)")]
    FiniteFixedPoint { letter: char, len: usize },
    #[error("morphism is not uniform")]
    NonUniform,
    #[error("domain needs at least {min} letters, has {actual}")]
    DomainTooSmall { min: usize, actual: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
