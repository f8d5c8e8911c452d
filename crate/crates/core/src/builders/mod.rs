//! Builders: concrete geometric input → [`ArrangementModel`].
//!
//! Every builder enumerates intersections over subsets of the input. Only
//! subsets whose defining equations are linearly independent are visited;
//! any nonempty intersection (or connected component of one) already
//! arises from such a subset, because dropping a dependent equation does
//! not change the dimension. Subsets are independent of one another and
//! are processed with [`Exec`].

mod abstract_model;
mod circle;
mod hyperplane;
mod sphere;
mod toric;

use num_bigint::BigInt;
use thiserror::Error;

use crate::arrangement::ModelError;
use crate::exactmath::Rational;
use crate::Exec;

pub use abstract_model::{build_abstract, AbstractFlat, AbstractSpec};
pub use circle::{build_circle, CircleSpec};
pub use hyperplane::{build_hyperplane, build_hyperplane_with, Hyperplane, HyperplaneSpec};
pub use sphere::{build_projective, build_projective_with, build_sphere, build_sphere_with, CentralSpec};
pub use toric::{build_toric, build_toric_with, ToricHypersurface, ToricSpec};

pub(crate) use hyperplane::{affine_flats, AffineFlat};

/// Default cap on the number of hypersurfaces a builder accepts.
pub const DEFAULT_BUILD_CAP: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    pub exec: Exec,
    pub max_hypersurfaces: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { exec: Exec::default(), max_hypersurfaces: DEFAULT_BUILD_CAP }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("hypersurface {index}: expected {expected} coordinates, got {got}")]
    DimensionMismatch { index: usize, expected: usize, got: usize },
    #[error("hypersurface {0} has a zero normal")]
    ZeroNormal(usize),
    #[error("hyperplanes {0} and {1} coincide")]
    DuplicateHyperplane(usize, usize),
    #[error("hypersurfaces {0} and {1} coincide")]
    Duplicate(usize, usize),
    #[error("normals {0} and {1} are parallel")]
    ParallelNormals(usize, usize),
    #[error("toric offset {index} = {offset} is outside [0, 1)")]
    OffsetOutOfRange { index: usize, offset: Rational },
    #[error("points {0} and {1} coincide")]
    DuplicatePoint(usize, usize),
    #[error("the arrangement needs at least one hypersurface")]
    EmptySpec,
    #[error("ambient dimension must be at least {min}, got {got}")]
    AmbientTooSmall { min: usize, got: usize },
    #[error("{count} hypersurfaces exceed the cap of {cap}")]
    TooMany { count: usize, cap: usize },
    #[error("not cellular: {0}")]
    NotCellular2D(String),
    #[error(transparent)]
    Model(#[from] ModelError),
}

pub(crate) fn check_cap(count: usize, opts: &BuildOptions) -> Result<(), BuildError> {
    // containment sets are u64 masks
    let cap = opts.max_hypersurfaces.min(64);
    if count > cap {
        return Err(BuildError::TooMany { count, cap });
    }
    Ok(())
}

/// All subsets of `0..n` with at most `max_size` elements, by size then
/// lexicographically.
pub(crate) fn subsets_up_to(n: usize, max_size: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for size in 0..=max_size.min(n) {
        rec(0, n, size, &mut Vec::new(), &mut out);
    }
    out
}

pub(crate) fn mask_of(indices: &[usize]) -> u64 {
    indices.iter().fold(0, |m, &i| m | 1 << i)
}

/// `h0.h3.h5`-style label for a set of hypersurface indices.
pub(crate) fn slug(prefix: char, indices: &[usize]) -> String {
    indices.iter().map(|i| format!("{prefix}{i}")).collect::<Vec<_>>().join(".")
}

pub(crate) fn is_zero_vector<T: num_traits::Zero>(v: &[T]) -> bool {
    v.iter().all(T::is_zero)
}

pub(crate) fn int_to_rat(v: &[BigInt]) -> Vec<Rational> {
    v.iter().cloned().map(Rational::from_integer).collect()
}
