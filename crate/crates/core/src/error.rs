use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("not Gorenstein: weight {weight} does not divide the weight sum {sigma}")]
    NotGorenstein { weight: u64, sigma: u64 },

    #[error("internal consistency: {0}")]
    Consistency(String),

    #[error("Veronese generator search incomplete: {0}")]
    Incomplete(String),

    #[error("Veronese image is not a hypersurface: {generators} generators for a space of dimension {dim}")]
    NotHypersurface {
        generators: usize,
        dim: usize,
        target_weights: Vec<u64>,
    },

    #[error("degenerate subdivision: ray {0:?} is already in the fan")]
    DegenerateSubdivision(Vec<i64>),

    #[error("cannot compose: {0}")]
    Composition(String),

    #[error("homogeneity: {0}")]
    Homogeneity(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
