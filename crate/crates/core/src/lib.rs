//! Exact counting of faces and chambers for arrangements of codimension-1
//! submanifolds: affine hyperplanes, subtori of a torus, great spheres,
//! projective hyperplanes and points on a circle.
//!
//! The pipeline is
//!
//! 1. a builder ([`builders`]) turns geometric input into an
//!    [`ArrangementModel`]: the intersection poset of connected components,
//!    each annotated with its compactly supported Poincaré polynomial;
//! 2. the counting routines in [`arrangement`] read chamber counts,
//!    f-vectors, characteristic polynomials and chain-fiber sizes off the
//!    Möbius function of that poset;
//! 3. [`oracle`] recomputes the same numbers by brute-force face
//!    enumeration so every formula can be checked independently.
//!
//! All arithmetic is exact ([`exactmath`]).

pub mod arrangement;
pub mod builders;
pub mod closedforms;
pub mod corpus;
pub mod exactmath;
pub mod exec;
pub mod oracle;
pub mod poset;

pub use arrangement::{ArrangementModel, Family, FlatHandle, FlatNode};
pub use exec::Exec;
