use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("map is not connected")]
    Disconnected,
    #[error("expected a unicellular map, found {0} faces")]
    NotUnicellular(usize),
    #[error("expected a plane tree, found genus {0}")]
    NotATree(usize),
    #[error("dart {dart} out of range for a map with {darts} darts")]
    DartOutOfRange { dart: usize, darts: usize },
    #[error("divisor must be positive")]
    ZeroDivisor,
    #[error("{d} does not divide edge count {n}")]
    NotADivisor { d: usize, n: usize },
    #[error("no covering of a {d}-edged dessin exists")]
    NoCovering { d: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
