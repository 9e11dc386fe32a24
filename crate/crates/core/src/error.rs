use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid algebra parameters n={n}, k={k}: need n >= 2 and k >= 1")]
    InvalidParams { n: usize, k: u32 },

    #[error("weight {labels:?} is not in the level-{k} alphabet of su({n})")]
    InvalidWeight { labels: Vec<u32>, n: usize, k: u32 },

    #[error("spin {twice}/2 is outside the level-{k} range")]
    InvalidSpin { twice: u32, k: u32 },

    #[error("entry {entry:?} = {value} is {deviation:e} away from a non-negative integer")]
    IntegralityViolation {
        entry: Vec<usize>,
        value: f64,
        deviation: f64,
    },

    #[error("|a| = {modulus} but sqrt(sum d^2) = {expected}")]
    DegenerateGaussSum { modulus: f64, expected: f64 },

    #[error("expected {expected} values, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("twisted NIM-reps are only implemented for n = 3 (got n = {0})")]
    UnsupportedRank(usize),

    #[error("no admissible matrix found at level {0}")]
    NoSolution(u32),

    #[error("2I - M is not positive definite")]
    NotPositiveDefinite,

    #[error("graph is not a connected ADE diagram: {0}")]
    NotAde(String),

    #[error("Perron-Frobenius eigenvalue {found} differs from d_v = {expected}")]
    EigenvalueMismatch { found: f64, expected: f64 },

    #[error("spectrum {found:?} does not match {expected:?}")]
    SpectrumMismatch { found: Vec<f64>, expected: Vec<f64> },

    #[error("eigenvalues {0:?} collide within tolerance")]
    DegenerateSpectrum(Vec<f64>),

    #[error("matrix is not irreducible non-negative")]
    NotIrreducible,
}
