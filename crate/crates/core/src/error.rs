use thiserror::Error;

/// Unified error type for the whole crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degree too small: constant evaluators require degree >= 2, got {0}")]
    DegreeTooSmall(u32),

    #[error("eta out of range: require 0.01 <= eta <= 0.45, got {0}")]
    BadEta(f64),

    #[error("division by zero magnitude")]
    DivideByZero,

    #[error("quadrature did not converge: partial value {value}, est_error {est_error} after {evaluations} evaluations")]
    NonConvergence {
        value: f64,
        est_error: f64,
        evaluations: usize,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("pole encountered: {0}")]
    Pole(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("|disc| = {disc} below admissible minimum {min} for degree {degree}")]
    DiscTooSmall { degree: u32, disc: u64, min: u64 },

    #[error("{0} is not a fundamental discriminant")]
    NotFundamental(i64),

    #[error("prime {p} divides the index [O_K : Z[theta]]; its factor cannot be certified")]
    IndexDivisor { p: u64 },

    #[error("x = {x} exceeds table limit X = {limit}")]
    RangeError { x: f64, limit: u64 },

    #[error("table too small: need X >= {need}, have {have}")]
    TableTooSmall { need: u64, have: u64 },

    #[error("discriminant {0} not supported by the lattice oracle (class-number-one set is -3,-4,-7,-8,-11)")]
    UnsupportedDiscriminant(i64),

    #[error("X = {x} exceeds the configured sieve budget {budget}; raise SieveConfig::max_x or sieve in chunks")]
    OutOfMemory { x: u64, budget: u64 },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("cache mismatch: {0}")]
    CacheMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
