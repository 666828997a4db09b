use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {index} out of range for width {width}")]
    IndexOutOfRange { index: usize, width: usize },
    #[error("line {0} appears in more than one pair")]
    DuplicateLine(usize),
    #[error("pair links line {0} to itself")]
    DegeneratePair(usize),
    #[error("link is not an involution at line {0}")]
    NotInvolution(usize),
    #[error("flip bits differ between line {0} and its partner")]
    FlipAsymmetry(usize),
    #[error("width mismatch: expected {expected}, found {found}")]
    WidthMismatch { expected: usize, found: usize },
    #[error("operation requires a positive width")]
    ZeroWidth,
    #[error("operation requires an even width, found {0}")]
    OddWidth(usize),
    #[error("exponent {exponent} exceeds the limit of {limit}")]
    Overflow { exponent: u32, limit: u32 },
    #[error("width {width} exceeds the exhaustive enumeration limit of {limit}")]
    WidthTooLarge { width: usize, limit: usize },
    #[error("unknown algorithm `{0}` (expected bsort, bfsort, knuth or batcher)")]
    UnknownAlgorithm(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
