//! The annotated intersection poset and the counting formulas read off it.
//!
//! A model is the intersection poset `L` of an arrangement (connected
//! components of nonempty intersections, ordered by reverse inclusion, with
//! the ambient space as minimum) where every node carries its dimension and
//! its compactly supported Poincaré polynomial `Poin_c(Y, t)`. The
//! combinatorial Euler characteristic is stored as `κ(Y) = Poin_c(Y, −1)`,
//! which agrees with the one-point-compactification definition for every
//! space the builders produce (open cells, tori, spheres, projective spaces,
//! points).

mod counting;
mod structure;
mod valuation;

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use thiserror::Error;

use crate::exactmath::{IntPolynomial, IntegerMatrix, Rational};
use crate::poset::{mobius_table_with, MobiusTable, Poset, PosetError};
use crate::Exec;

pub use counting::{
    bayer_sturmfels_fiber, chamber_count, chambers_of_restriction, f_polynomial_geometric, f_polynomial_simple,
    f_vector, generalized_char_poly, CountError, FVector,
};
pub use structure::{check_structure, StructureReport};
pub use valuation::{complement_indicator, integrate, Integral, SimpleFunction, Valuation, ValuationError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Hyperplane,
    Toric,
    Sphere,
    Projective,
    Circle,
    Abstract,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Hyperplane => "hyperplane",
            Family::Toric => "toric",
            Family::Sphere => "sphere",
            Family::Projective => "projective",
            Family::Circle => "circle",
            Family::Abstract => "abstract",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Family-specific geometric witness for a flat.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FlatHandle {
    Ambient,
    /// Affine flat `point + span(directions)`; `containing` lists the
    /// hyperplanes (by input index) that contain it.
    Hyperplane { point: Vec<Rational>, directions: Vec<Vec<Rational>>, containing: Vec<usize> },
    /// One connected component of a subtorus intersection: the coset
    /// `{x : lattice · x ≡ residue (mod 1)}` of `ℝ^l / ℤ^l`. `lattice` is in
    /// Hermite normal form, so `(lattice, residue)` is canonical.
    Toric {
        witness: Vec<Rational>,
        lattice: IntegerMatrix,
        residue: Vec<Rational>,
        containing: Vec<usize>,
        covectors: Vec<Vec<BigInt>>,
    },
    /// Subsphere cut out by a central flat. Zero-dimensional flats split into
    /// two nodes, told apart by the orientation of `direction`.
    Sphere { containing: Vec<usize>, direction: Option<Vec<Rational>> },
    Projective { containing: Vec<usize> },
    Circle { angle: Rational },
    Abstract,
}

impl FlatHandle {
    /// Input hypersurfaces containing this flat, where the family tracks them.
    pub fn containing(&self) -> Option<&[usize]> {
        match self {
            FlatHandle::Hyperplane { containing, .. }
            | FlatHandle::Toric { containing, .. }
            | FlatHandle::Sphere { containing, .. }
            | FlatHandle::Projective { containing } => Some(containing),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatNode {
    pub id: String,
    pub dim: usize,
    pub poin_c: IntPolynomial,
    pub kappa: BigInt,
    pub handle: FlatHandle,
}

impl FlatNode {
    pub fn new(id: impl Into<String>, dim: usize, poin_c: IntPolynomial, handle: FlatHandle) -> Self {
        let kappa = poin_c.evaluate_int(-1);
        FlatNode { id: id.into(), dim, poin_c, kappa, handle }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error("minimum `{id}` has dimension {dim}, expected the ambient dimension {ambient}")]
    BottomNotAmbient { id: String, dim: usize, ambient: usize },
    #[error("`{id}` has rank {rank} but codimension {codim}")]
    RankMismatch { id: String, rank: usize, codim: usize },
    #[error("`{id}`: Poin_c has degree {degree} above the dimension {dim}")]
    DegreeExceedsDim { id: String, degree: usize, dim: usize },
    #[error("`{id}` has dimension {dim} above the ambient dimension {ambient}")]
    DimExceedsAmbient { id: String, dim: usize, ambient: usize },
}

/// Per-interval structure, computed lazily.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct IntervalSummary {
    pub all_geometric: bool,
    pub all_boolean: bool,
}

/// Intersection poset annotated with dimensions and `Poin_c`.
#[derive(Debug)]
pub struct ArrangementModel {
    ambient_dim: usize,
    family: Family,
    poset: Poset,
    flats: Vec<FlatNode>,
    mobius: MobiusTable,
    asserted_cellular: bool,
    intervals: OnceLock<IntervalSummary>,
}

impl ArrangementModel {
    /// `order_pairs` are `(lower, upper)` index pairs into `flats`, i.e.
    /// `upper ⊆ lower` geometrically. They need not be transitively closed.
    pub fn new(
        ambient_dim: usize,
        family: Family,
        flats: Vec<FlatNode>,
        order_pairs: &[(usize, usize)],
    ) -> Result<Self, ModelError> {
        Self::with_exec(ambient_dim, family, flats, order_pairs, Exec::default())
    }

    pub fn with_exec(
        ambient_dim: usize,
        family: Family,
        flats: Vec<FlatNode>,
        order_pairs: &[(usize, usize)],
        exec: Exec,
    ) -> Result<Self, ModelError> {
        let poset = Poset::from_indexed(flats.iter().map(|f| f.id.clone()).collect(), order_pairs)?;
        let bottom = &flats[poset.bottom()];
        if bottom.dim != ambient_dim {
            return Err(ModelError::BottomNotAmbient { id: bottom.id.clone(), dim: bottom.dim, ambient: ambient_dim });
        }
        for (i, f) in flats.iter().enumerate() {
            if f.dim > ambient_dim {
                return Err(ModelError::DimExceedsAmbient { id: f.id.clone(), dim: f.dim, ambient: ambient_dim });
            }
            if poset.rank(i) != ambient_dim - f.dim {
                return Err(ModelError::RankMismatch { id: f.id.clone(), rank: poset.rank(i), codim: ambient_dim - f.dim });
            }
            if let Some(d) = f.poin_c.degree().filter(|&d| d > f.dim) {
                return Err(ModelError::DegreeExceedsDim { id: f.id.clone(), degree: d, dim: f.dim });
            }
        }
        let mobius = mobius_table_with(&poset, exec);
        Ok(ArrangementModel {
            ambient_dim,
            family,
            poset,
            flats,
            mobius,
            asserted_cellular: false,
            intervals: OnceLock::new(),
        })
    }

    /// Marks the model as cellular by assumption rather than by check.
    pub fn assert_cellular(mut self) -> Self {
        self.asserted_cellular = true;
        self
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn mobius(&self) -> &MobiusTable {
        &self.mobius
    }

    pub fn flats(&self) -> &[FlatNode] {
        &self.flats
    }

    pub fn flat(&self, i: usize) -> &FlatNode {
        &self.flats[i]
    }

    /// Index of the ambient space.
    pub fn ambient(&self) -> usize {
        self.poset.bottom()
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.poset.index_of(id)
    }

    /// Cellularity was assumed, not verified (toric, dimension ≥ 3).
    pub fn is_asserted_cellular(&self) -> bool {
        self.asserted_cellular
    }

    /// Flat indices with `dim = k`.
    pub fn flats_of_dim(&self, k: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.flats.len()).filter(move |&i| self.flats[i].dim == k)
    }

    /// Number of flats of each dimension, indexed by dimension.
    pub fn dimension_census(&self) -> Vec<usize> {
        let mut a = vec![0; self.ambient_dim + 1];
        for f in &self.flats {
            a[f.dim] += 1;
        }
        a
    }

    pub(crate) fn interval_summary(&self) -> IntervalSummary {
        *self.intervals.get_or_init(|| {
            let all_geometric = true;
            let mut all_boolean = true;
            for x in 0..self.poset.len() {
                for y in self.poset.upper_set(x) {
                    let sub = self.poset.interval_subposet(x, y).expect("comparable by construction");
                    if !sub.is_geometric_lattice() {
                        return IntervalSummary { all_geometric: false, all_boolean: false };
                    }
                    let atoms = sub.upper_covers(sub.bottom()).len();
                    all_boolean &= atoms == sub.height();
                }
            }
            IntervalSummary { all_geometric, all_boolean }
        })
    }

    /// Every interval `[Y, Z]` is a geometric lattice.
    pub fn intervals_are_geometric(&self) -> bool {
        self.interval_summary().all_geometric
    }

    /// Every interval is a Boolean algebra (relative general position).
    pub fn is_simple(&self) -> bool {
        self.interval_summary().all_boolean
    }
}
