use thiserror::Error;

use crate::field::FieldSpec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: String, found: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("index out of range: {0}")]
    IndexError(String),

    #[error(
        "unsupported characteristic {characteristic} over {field}: a balanced neighborly \
         polynomial of type (2,2,2,2) exists if and only if the characteristic is not 2"
    )]
    UnsupportedCharacteristic {
        field: FieldSpec,
        characteristic: u32,
    },

    #[error("type mismatch: requested type {requested:?} but polynomial shape is {shape:?}")]
    TypeMismatch {
        requested: Vec<usize>,
        shape: Vec<usize>,
    },

    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,

    #[error("candidate space too large: {candidates} candidates exceeds the limit of {limit}")]
    CandidateSpaceTooLarge { candidates: u128, limit: u64 },

    #[error("facet {facet} is not colorful: color {color} repeats")]
    NotBalanced { facet: usize, color: usize },

    #[error("facet {facet} has {size} vertices, expected {expected}")]
    NotPure {
        facet: usize,
        size: usize,
        expected: usize,
    },

    #[error("vertex {index} of color {color} lies in no facet")]
    IsolatedVertex { color: usize, index: usize },

    #[error("top-degree quotient has dimension {dimension}, expected 1")]
    NotGorensteinTop { dimension: usize },

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn mismatch(expected: FieldSpec, found: FieldSpec) -> Self {
        Error::FieldMismatch {
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }
}
