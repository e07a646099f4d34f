use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("symbol ids start at 1")]
    ZeroSymbol,
    #[error("cannot parse text {0:?}")]
    BadText(String),
    #[error("text is not a palindrome")]
    NotPalindrome,
    #[error("palindrome has no period of at most half its length")]
    NotPeriodic,
    #[error("radius array must have odd length 2n-1 or be empty (got {0})")]
    BadRadiiLength(usize),
    #[error("length field {n} does not match {len} radii")]
    LengthMismatch { n: usize, len: usize },
    #[error("radius {radius} at array index {index} exceeds bound {bound}")]
    RadiusBound {
        index: usize,
        radius: usize,
        bound: usize,
    },
    #[error("malformed fingerprint: {0}")]
    BadFingerprint(String),
    #[error("text length {got} does not match fingerprint length {expected}")]
    TextLength { expected: usize, got: usize },
    #[error("coloring assigns equal symbols across the edge between classes {0} and {1}")]
    ImproperColoring(usize, usize),
    #[error("coloring covers {got} of {expected} classes")]
    PartialColoring { expected: usize, got: usize },
    #[error("text is not constant on equality class {0}")]
    NotConstantOnClass(usize),
    #[error("unrealizable: {0}")]
    Unrealizable(String),
    #[error("k = {k} outside the feasible alphabet range [{min}, {max}]")]
    KOutOfRange { k: usize, min: usize, max: usize },
    #[error("malformed bit stream: {0}")]
    BadBits(String),
    #[error("malformed counter array: {0}")]
    BadCounter(String),
    #[error("malformed delta array: {0}")]
    BadDelta(String),
    #[error("event ({start},{len}) out of range for {genes} genes")]
    EventOutOfRange {
        start: usize,
        len: usize,
        genes: usize,
    },
    #[error("history is not an ordered event list: {0}")]
    BadHistory(String),
    #[error("malformed duplication tree: {0}")]
    BadTree(String),
    #[error("n = {n} exceeds the configured exhaustive limit {limit}")]
    CensusLimit { n: usize, limit: usize },
    #[error("census self-check failed: {0}")]
    CensusInvariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
