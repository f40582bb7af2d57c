//! Reproduction of the reference constant tables and empirical checking
//! of the headline inequalities against sieved counts.

pub mod report;
pub mod tables;

pub use report::{bound_report, BoundPoint, BoundReport};
pub use tables::{reproduce, TableReport};
