//! Explicit constants, coefficient sieves, and verification harness for
//! ideal-counting estimates in number fields.
//!
//! The library evaluates every named constant in the error-term bound
//! `|I_K(x) − κ_K·x| ≤ Λ_K |Δ|^{1/(n+1)} (log|Δ|)^{n−1} x^{1−2/(n+1)}`,
//! computes the Dirichlet coefficients τ_m (number of integral ideals of
//! norm m) for concrete fields, and checks the bound and all auxiliary
//! inequalities numerically.

pub mod analytic;
pub mod constants;
pub mod counting;
pub mod error;
pub mod field;
pub mod format;
pub mod numerics;
pub mod residue;
pub mod verify;

pub use error::Error;
pub use field::FieldSpec;
pub use numerics::logmag::LogMagnitude;
pub use numerics::quad::QuadratureResult;
