//! Dirichlet coefficients tau_m (ideals of norm m) and prefix counts.

pub mod cache;
pub mod kronecker;
pub mod oracle;
pub mod polyarith;
pub mod sieve;

pub use sieve::{ideal_count, tau_sieve, SieveConfig, TauTable};
