use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow")]
    Overflow,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("expected {expected} entries for a {n}x{n} matrix, got {got}")]
    BadShape { n: usize, expected: usize, got: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not unimodular (det = {0})")]
    NotUnimodular(String),
    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("index k must be positive")]
    ZeroIndex,
    #[error("group closure exceeded {0} elements")]
    ClosureCap(usize),
    #[error("empty generator set")]
    NoGenerators,
    #[error("Burnside average {sum}/{order} is not an integer")]
    NonIntegerAverage { sum: u128, order: usize },
}
