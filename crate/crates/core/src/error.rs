use thiserror::Error;

use crate::tableaux::Cell;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid pipe dream: {0}")]
    InvalidDream(String),

    #[error("pipe dream is not reduced: pipes {0} and {1} cross more than once")]
    NotReduced(usize, usize),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("index out of range: {0}")]
    Index(String),

    #[error("({0}, {1}) is not an inversion")]
    NotInversion(usize, usize),

    #[error("box {0:?} is outside the inversions diagram")]
    OutsideDiagram(Cell),

    #[error("tableau is not column-injective: column {column} repeats entry {value}")]
    NotColumnInjective { column: usize, value: u32 },

    #[error("chute move is not applicable: {0}")]
    NotApplicable(String),

    #[error("size guard: {0}")]
    SizeGuard(String),

    #[error("element is not in this poset")]
    UnknownElement,

    #[error("elements are incomparable")]
    Incomparable,

    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
