//! Great-sphere and projective arrangements, both read off a central
//! hyperplane arrangement in `ℝ^{l+1}`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::hyperplane::containment_pairs;
use super::{affine_flats, check_cap, is_zero_vector, slug, AffineFlat, BuildError, BuildOptions, Hyperplane};
use crate::arrangement::{ArrangementModel, Family, FlatHandle, FlatNode};
use crate::exactmath::{rref, IntPolynomial, Rational, RationalMatrix};

/// Central hyperplanes `normal · x = 0` in `ℝ^{l+1}`, cutting `S^l` or `ℝP^l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralSpec {
    pub ambient_dim: usize,
    pub normals: Vec<Vec<Rational>>,
}

impl CentralSpec {
    pub fn new(ambient_dim: usize, normals: Vec<Vec<Rational>>) -> Self {
        CentralSpec { ambient_dim, normals }
    }

    pub fn validate(&self) -> Result<(), BuildError> {
        if self.ambient_dim == 0 {
            return Err(BuildError::AmbientTooSmall { min: 1, got: 0 });
        }
        let n = self.ambient_dim + 1;
        for (i, v) in self.normals.iter().enumerate() {
            if v.len() != n {
                return Err(BuildError::DimensionMismatch { index: i, expected: n, got: v.len() });
            }
            if is_zero_vector(v) {
                return Err(BuildError::ZeroNormal(i));
            }
        }
        for i in 0..self.normals.len() {
            for j in i + 1..self.normals.len() {
                let pair = RationalMatrix::from_rows(n, &[self.normals[i].clone(), self.normals[j].clone()]);
                if rref(&pair).rank < 2 {
                    return Err(BuildError::ParallelNormals(i, j));
                }
            }
        }
        Ok(())
    }

    fn hyperplanes(&self) -> Vec<Hyperplane> {
        self.normals.iter().map(|v| Hyperplane::new(v.clone(), Rational::zero())).collect()
    }

    /// Flats of the central arrangement other than the origin.
    fn central_flats(&self, opts: &BuildOptions) -> Result<Vec<AffineFlat>, BuildError> {
        self.validate()?;
        check_cap(self.normals.len(), opts)?;
        let mut flats = affine_flats(self.ambient_dim + 1, &self.hyperplanes(), opts.exec);
        flats.retain(|f| f.dim() > 0);
        Ok(flats)
    }
}

pub fn build_sphere(spec: &CentralSpec) -> Result<ArrangementModel, BuildError> {
    build_sphere_with(spec, &BuildOptions::default())
}

/// A central flat of dimension `d ≥ 2` becomes a great `S^{d−1}` with
/// `Poin_c = 1 + t^{d−1}`; a line becomes the two points `S⁰`, labelled
/// `+`/`−` by the ray they lie on (the `+` ray has first nonzero coordinate
/// positive).
pub fn build_sphere_with(spec: &CentralSpec, opts: &BuildOptions) -> Result<ArrangementModel, BuildError> {
    let flats = spec.central_flats(opts)?;
    let l = spec.ambient_dim;

    // expand lines into two nodes, remembering which central flat each came from
    let mut nodes = Vec::new();
    let mut source = Vec::new();
    for (k, f) in flats.iter().enumerate() {
        let d = f.dim();
        let base = if f.containing.is_empty() { "X".to_string() } else { slug('h', &f.containing) };
        if d >= 2 {
            let poin = &IntPolynomial::constant(BigInt::one()) + &IntPolynomial::monomial(d - 1);
            let handle = FlatHandle::Sphere { containing: f.containing.clone(), direction: None };
            nodes.push(FlatNode::new(base, d - 1, poin, handle));
            source.push(k);
        } else {
            let ray = oriented(&f.directions[0]);
            let neg: Vec<Rational> = ray.iter().map(|x| -x).collect();
            for (sign, dir) in [("+", ray), ("-", neg)] {
                let handle = FlatHandle::Sphere { containing: f.containing.clone(), direction: Some(dir) };
                nodes.push(FlatNode::new(format!("{base}{sign}"), 0, IntPolynomial::constant(BigInt::one()), handle));
                source.push(k);
            }
        }
    }

    let masks: Vec<u64> = flats.iter().map(|f| f.mask).collect();
    let mut pairs = Vec::new();
    for (a, b) in containment_pairs(&masks) {
        for (i, _) in source.iter().enumerate().filter(|(_, &s)| s == a) {
            for (j, _) in source.iter().enumerate().filter(|(_, &s)| s == b) {
                pairs.push((i, j));
            }
        }
    }
    Ok(ArrangementModel::with_exec(l, Family::Sphere, nodes, &pairs, opts.exec)?)
}

/// Scale so the first nonzero coordinate is positive.
fn oriented(v: &[Rational]) -> Vec<Rational> {
    match v.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => v.iter().map(|y| -y).collect(),
        _ => v.to_vec(),
    }
}

pub fn build_projective(spec: &CentralSpec) -> Result<ArrangementModel, BuildError> {
    build_projective_with(spec, &BuildOptions::default())
}

/// A central flat of dimension `d ≥ 1` becomes `ℝP^{d−1}`, whose rational
/// compactly supported cohomology is `1 + t^n` for odd `n = d − 1` and `1`
/// for even `n`.
pub fn build_projective_with(spec: &CentralSpec, opts: &BuildOptions) -> Result<ArrangementModel, BuildError> {
    let flats = spec.central_flats(opts)?;
    let masks: Vec<u64> = flats.iter().map(|f| f.mask).collect();
    let nodes = flats
        .into_iter()
        .map(|f| {
            let n = f.dim() - 1;
            let id = if f.containing.is_empty() { "X".to_string() } else { slug('h', &f.containing) };
            let mut poin = IntPolynomial::constant(BigInt::one());
            if n % 2 == 1 {
                poin = &poin + &IntPolynomial::monomial(n);
            }
            FlatNode::new(id, n, poin, FlatHandle::Projective { containing: f.containing })
        })
        .collect();
    Ok(ArrangementModel::with_exec(spec.ambient_dim, Family::Projective, nodes, &containment_pairs(&masks), opts.exec)?)
}
