use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty word has no shift")]
    EmptyWord,
    #[error("invalid symbol {0:?}: symbols must be printable and non-whitespace")]
    InvalidSymbol(char),
    #[error("length mismatch: |x| = {x} but |y| = {y}")]
    LengthMismatch { x: usize, y: usize },
    #[error("{border_len} is not a proper border length of {word}")]
    NotABorder { word: String, border_len: usize },
    #[error("non-monotone length chain: length {len} is shorter than the current word ({current})")]
    NonMonotoneChain { len: usize, current: usize },
    #[error("instance exceeds optimal-search guard ({len} > {guard})")]
    GuardExceeded { len: usize, guard: usize },
    #[error("proposition precondition violated: {0}")]
    PreconditionViolated(&'static str),
    #[error("index {index} out of range {min}..={max}")]
    OutOfRange { index: usize, min: usize, max: usize },
    #[error("malformed tuple field {field} ({text:?}): {reason}")]
    TupleField {
        field: usize,
        text: String,
        reason: &'static str,
    },
    #[error("malformed tuple: {0}")]
    Tuple(&'static str),
    #[error("unknown verify suite {0:?}")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
