//! Brute-force ground truth, kept deliberately independent of the
//! intersection-poset machinery it is used to check.
//!
//! Hyperplane faces come from testing every sign vector in `{−, 0, +}^n`
//! for feasibility with Fourier–Motzkin; sphere and projective counts are
//! read off the faces of the central arrangement; 2-dimensional toric
//! chamber counts come from the Euler relation on the torus.

mod faces;
mod toric;

use thiserror::Error;

use crate::builders::BuildError;

pub use faces::{
    enumerate_faces, enumerate_faces_with, fiber_count_direct, oracle_f_vector, quotient_counts, FacePoset, QuotientMode,
    Sign, SignVector,
};
pub use toric::{circle_arcs, toric_chambers_2d};

/// Default cap on hyperplanes for the `3^n` enumeration.
pub const DEFAULT_ORACLE_CAP: usize = 12;

/// The cap, overridden by the `DISSECT_CAP` environment variable when set.
pub fn configured_cap() -> usize {
    std::env::var("DISSECT_CAP").ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_ORACLE_CAP)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{count} hyperplanes exceed the oracle cap of {cap} (set DISSECT_CAP to raise it)")]
    CapExceeded { count: usize, cap: usize },
    #[error("not a chain: {0}")]
    NotAChain(String),
    #[error("the arrangement is not central")]
    NotCentral,
    #[error("not cellular: {0}")]
    NotCellular(String),
    #[error("sign vector {0} has no antipode")]
    OddPairing(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Invalid(#[from] BuildError),
}
