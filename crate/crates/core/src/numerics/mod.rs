//! Log-space arithmetic, special functions, and adaptive quadrature.

pub mod logmag;
pub mod quad;
pub mod special;
