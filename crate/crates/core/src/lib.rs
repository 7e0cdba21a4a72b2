//! Exact construction, evaluation and verification of free generator systems
//! for fields of invariants of unipotent radicals of parabolic subgroups
//! acting by conjugation on GL(n), SL(n), O(N) and Sp(N).

pub mod error;
pub mod generators;
pub mod linalg;
pub mod sampling;
pub mod shapes;
pub mod verification;

#[cfg(test)]
mod oracle;

pub use error::{Error, Result};
