use thiserror::Error;

use crate::parser::ParseError;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands belong to different algebras ({left} and {right})")]
    MixedAlgebra { left: String, right: String },

    #[error("bracket operand `{0}` is not parity-homogeneous")]
    InhomogeneousOperand(String),

    #[error("the empty word has no value: the algebra has no unit")]
    EmptyWord,

    #[error("word rules are defined only for the four-letter algebra A, not `{0}`")]
    RulesRequireA(String),

    #[error("letter index {index} is out of range for `{algebra}` (dim {dim})")]
    LetterOutOfRange {
        algebra: String,
        index: usize,
        dim: usize,
    },

    #[error("malformed algebra document: {0}")]
    Document(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("parity of generator {index} must be 0 or 1, found {value}")]
    BadParity { index: usize, value: i64 },

    #[error("basis index {index} out of range in table entry ({row}, {col})")]
    BadIndex { row: usize, col: usize, index: i64 },

    #[error("diagonal entry {0} is not a signed copy of the first generator")]
    UndefinedSignature(String),

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("a bare nonzero scalar has no value: `{0}` has no unit")]
    NoUnit(String),

    #[error("bracket kinds of `{0}` do not match the grading")]
    BracketKindMismatch(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T> = std::result::Result<T, Error>;
