//! Exact computation of quadratic convolution ("Faltung") recurrences.
//!
//! The crate computes the two-index table `a(k,l)`, the normalized sequences
//! `alpha`, `b`, `beta` and `w`, the exact joint moments they feed, the
//! Painleve I formal-series identities, Wright's connected-graph counts and
//! the rooted-map generating functions of Tutte type, and it extracts the
//! associated asymptotic constants by Richardson extrapolation.

pub mod asymptotics;
pub mod error;
pub mod exact;
pub mod recurrences;
pub mod series;
pub mod tutte;
pub mod wright;

pub use error::{Error, Result};
