use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{check_cap, is_zero_vector, mask_of, slug, subsets_up_to, BuildError, BuildOptions};
use crate::arrangement::{ArrangementModel, Family, FlatHandle, FlatNode};
use crate::exactmath::{rref, solve_affine, AffineSolution, IntPolynomial, Rational, RationalMatrix};
use crate::Exec;

/// Affine hyperplane `normal · x = offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperplane {
    pub normal: Vec<Rational>,
    pub offset: Rational,
}

impl Hyperplane {
    pub fn new(normal: Vec<Rational>, offset: Rational) -> Self {
        Hyperplane { normal, offset }
    }

    /// `[normal | offset]` scaled so the leading normal entry is 1.
    fn canonical(&self) -> Vec<Rational> {
        let lead = self.normal.iter().find(|c| !c.is_zero()).cloned().unwrap_or_else(Rational::one);
        self.normal.iter().chain(std::iter::once(&self.offset)).map(|c| c / &lead).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperplaneSpec {
    pub ambient_dim: usize,
    pub hyperplanes: Vec<Hyperplane>,
}

impl HyperplaneSpec {
    pub fn new(ambient_dim: usize, hyperplanes: Vec<Hyperplane>) -> Self {
        HyperplaneSpec { ambient_dim, hyperplanes }
    }

    pub fn validate(&self) -> Result<(), BuildError> {
        for (i, h) in self.hyperplanes.iter().enumerate() {
            if h.normal.len() != self.ambient_dim {
                return Err(BuildError::DimensionMismatch { index: i, expected: self.ambient_dim, got: h.normal.len() });
            }
            if is_zero_vector(&h.normal) {
                return Err(BuildError::ZeroNormal(i));
            }
        }
        let canon: Vec<_> = self.hyperplanes.iter().map(Hyperplane::canonical).collect();
        for i in 0..canon.len() {
            for j in i + 1..canon.len() {
                if canon[i] == canon[j] {
                    return Err(BuildError::DuplicateHyperplane(i, j));
                }
            }
        }
        Ok(())
    }

    /// True when every offset is zero.
    pub fn is_central(&self) -> bool {
        self.hyperplanes.iter().all(|h| h.offset.is_zero())
    }
}

/// A nonempty intersection `point + span(directions)`.
#[derive(Clone, Debug)]
pub(crate) struct AffineFlat {
    pub point: Vec<Rational>,
    pub directions: Vec<Vec<Rational>>,
    pub containing: Vec<usize>,
    pub mask: u64,
}

impl AffineFlat {
    pub fn dim(&self) -> usize {
        self.directions.len()
    }
}

/// All nonempty intersections, deduplicated on the reduced row-echelon
/// form of their defining system, ordered by codimension then by
/// containing set. The first entry is the whole space.
pub(crate) fn affine_flats(l: usize, hyperplanes: &[Hyperplane], exec: Exec) -> Vec<AffineFlat> {
    let subsets = subsets_up_to(hyperplanes.len(), l);
    let solved = exec.map(&subsets, |s| {
        let rows: Vec<Vec<Rational>> = s.iter().map(|&i| hyperplanes[i].normal.clone()).collect();
        let a = RationalMatrix::from_rows(l, &rows);
        if rref(&a).rank < s.len() {
            return None;
        }
        let b: Vec<Rational> = s.iter().map(|&i| hyperplanes[i].offset.clone()).collect();
        let AffineSolution::Feasible { point, nullspace } = solve_affine(&a, &b) else {
            unreachable!("independent equations are always consistent")
        };
        let aug: Vec<Vec<Rational>> = s
            .iter()
            .map(|&i| hyperplanes[i].normal.iter().chain(std::iter::once(&hyperplanes[i].offset)).cloned().collect())
            .collect();
        let key = rref(&RationalMatrix::from_rows(l + 1, &aug)).reduced;
        Some((key, point, nullspace))
    });

    let mut unique = BTreeMap::new();
    for (key, point, nullspace) in solved.into_iter().flatten() {
        unique.entry(key).or_insert((point, nullspace));
    }

    let mut flats: Vec<AffineFlat> = exec.map(&unique.into_values().collect::<Vec<_>>(), |(point, directions)| {
        let containing: Vec<usize> = hyperplanes
            .iter()
            .enumerate()
            .filter(|(_, h)| {
                dot(&h.normal, point) == h.offset && directions.iter().all(|v| dot(&h.normal, v).is_zero())
            })
            .map(|(i, _)| i)
            .collect();
        AffineFlat { point: point.clone(), directions: directions.clone(), mask: mask_of(&containing), containing }
    });
    flats.sort_by(|a, b| b.dim().cmp(&a.dim()).then_with(|| a.containing.cmp(&b.containing)));
    flats
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `(lower, upper)` pairs for reverse inclusion, read off containing sets:
/// `G ⊆ F` iff every hyperplane through `F` passes through `G`.
pub(crate) fn containment_pairs(masks: &[u64]) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for (i, &a) in masks.iter().enumerate() {
        for (j, &b) in masks.iter().enumerate() {
            if i != j && a & b == a && a != b {
                pairs.push((i, j));
            }
        }
    }
    pairs
}

pub fn build_hyperplane(spec: &HyperplaneSpec) -> Result<ArrangementModel, BuildError> {
    build_hyperplane_with(spec, &BuildOptions::default())
}

/// Flats get `Poin_c = t^dim` (each is homeomorphic to ℝ^dim) and ids
/// like `h0.h2` naming the hyperplanes through them; the ambient space is `X`.
pub fn build_hyperplane_with(spec: &HyperplaneSpec, opts: &BuildOptions) -> Result<ArrangementModel, BuildError> {
    spec.validate()?;
    check_cap(spec.hyperplanes.len(), opts)?;
    let l = spec.ambient_dim;
    let flats = affine_flats(l, &spec.hyperplanes, opts.exec);
    let masks: Vec<u64> = flats.iter().map(|f| f.mask).collect();
    let nodes = flats
        .into_iter()
        .map(|f| {
            let id = if f.containing.is_empty() { "X".to_string() } else { slug('h', &f.containing) };
            let dim = f.dim();
            let handle = FlatHandle::Hyperplane { point: f.point, directions: f.directions, containing: f.containing };
            FlatNode::new(id, dim, IntPolynomial::monomial(dim), handle)
        })
        .collect();
    Ok(ArrangementModel::with_exec(l, Family::Hyperplane, nodes, &containment_pairs(&masks), opts.exec)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    pub(crate) fn spec(l: usize, hs: &[(&[i64], i64)]) -> HyperplaneSpec {
        HyperplaneSpec::new(l, hs.iter().map(|(n, b)| Hyperplane::new(n.iter().map(|&x| q(x)).collect(), q(*b))).collect())
    }

    #[test]
    fn coordinate_axes() {
        let m = build_hyperplane(&spec(2, &[(&[1, 0], 0), (&[0, 1], 0)])).unwrap();
        let ids: Vec<&str> = m.flats().iter().map(|f| f.id.as_str()).collect();
        assert_eq!(ids, vec!["X", "h0", "h1", "h0.h1"]);
        let ranks: Vec<usize> = (0..4).map(|i| m.poset().rank(i)).collect();
        assert_eq!(ranks, vec![0, 1, 1, 2]);
        assert_eq!(m.flat(3).poin_c, IntPolynomial::monomial(0));
        assert_eq!(m.flat(0).kappa, BigInt::from(1));
        assert_eq!(m.flat(1).kappa, BigInt::from(-1));
    }

    #[test]
    fn parallel_lines_have_no_vertex() {
        let m = build_hyperplane(&spec(2, &[(&[1, 0], 0), (&[1, 0], 1)])).unwrap();
        assert_eq!(m.flats().len(), 3);
        assert_eq!(m.poset().height(), 1);
    }

    #[test]
    fn generic_lines() {
        let m = build_hyperplane(&spec(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[1, 1], 1)])).unwrap();
        assert_eq!(m.dimension_census(), vec![3, 3, 1]);
    }

    #[test]
    fn concurrent_lines_share_a_vertex() {
        let m = build_hyperplane(&spec(2, &[(&[1, 0], 0), (&[0, 1], 0), (&[1, 1], 0)])).unwrap();
        assert_eq!(m.dimension_census(), vec![1, 3, 1]);
        assert_eq!(m.flat(4).id, "h0.h1.h2");
    }

    #[test]
    fn validation() {
        assert_eq!(
            build_hyperplane(&spec(2, &[(&[1, 1], 1), (&[2, 2], 2)])).unwrap_err(),
            BuildError::DuplicateHyperplane(0, 1)
        );
        assert_eq!(build_hyperplane(&spec(2, &[(&[0, 0], 1)])).unwrap_err(), BuildError::ZeroNormal(0));
        assert!(matches!(build_hyperplane(&spec(2, &[(&[1], 1)])), Err(BuildError::DimensionMismatch { .. })));
        let many: Vec<(Vec<i64>, i64)> = (0..21).map(|i| (vec![1, 0], i)).collect();
        let many: Vec<(&[i64], i64)> = many.iter().map(|(n, b)| (n.as_slice(), *b)).collect();
        assert!(matches!(build_hyperplane(&spec(2, &many)), Err(BuildError::TooMany { count: 21, cap: 20 })));
    }

    #[test]
    fn empty_arrangement() {
        let m = build_hyperplane(&spec(3, &[])).unwrap();
        assert_eq!(m.flats().len(), 1);
        assert_eq!(m.flat(0).poin_c, IntPolynomial::monomial(3));
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let s = spec(3, &[(&[1, 0, 0], 0), (&[0, 1, 0], 1), (&[1, 1, 1], 2), (&[1, -1, 2], 0), (&[2, 1, -1], 3)]);
        let a = build_hyperplane_with(&s, &BuildOptions { exec: Exec::Sequential, ..Default::default() }).unwrap();
        let b = build_hyperplane_with(&s, &BuildOptions { exec: Exec::Parallel, ..Default::default() }).unwrap();
        assert_eq!(a.flats(), b.flats());
        assert_eq!(a.poset().covers(), b.poset().covers());
    }
}
