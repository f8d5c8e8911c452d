use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{configured_cap, OracleError};
use crate::builders::HyperplaneSpec;
use crate::exactmath::{fm_feasible, rref, Constraint, Direction, Rational, RationalMatrix};
use crate::Exec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    fn negated(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Zero => Sign::Zero,
            Sign::Plus => Sign::Minus,
        }
    }
}

/// Position of a face relative to each hyperplane.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignVector(pub Vec<Sign>);

impl SignVector {
    pub fn zero_set(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, s)| **s == Sign::Zero).map(|(i, _)| i).collect()
    }

    /// `self ≤ other` in the closure order: every entry of `self` is zero
    /// or agrees with `other`.
    pub fn leq(&self, other: &SignVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == Sign::Zero || a == b)
    }

    pub fn negated(&self) -> SignVector {
        SignVector(self.0.iter().map(|s| s.negated()).collect())
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            f.write_str(match s {
                Sign::Minus => "-",
                Sign::Zero => "0",
                Sign::Plus => "+",
            })?;
        }
        Ok(())
    }
}

/// All faces of a hyperplane arrangement, in lexicographic sign-vector
/// order, with their dimensions and the flat (by id) each one spans.
///
/// The order is the closure order on sign vectors; it has no unique
/// minimum in general, so it is queried through [`FacePoset::leq`] rather
/// than stored as a [`crate::poset::Poset`].
#[derive(Clone, Debug)]
pub struct FacePoset {
    ambient_dim: usize,
    central: bool,
    faces: Vec<SignVector>,
    dims: Vec<usize>,
    psi: Vec<String>,
}

impl FacePoset {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn faces(&self) -> &[SignVector] {
        &self.faces
    }

    pub fn dim(&self, i: usize) -> usize {
        self.dims[i]
    }

    /// Id of the flat spanned by face `i`, in the builders' naming scheme.
    pub fn psi(&self, i: usize) -> &str {
        &self.psi[i]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.faces[i].leq(&self.faces[j])
    }

    pub fn is_central(&self) -> bool {
        self.central
    }

    /// Faces with no zero entry.
    pub fn chambers(&self) -> usize {
        self.dims.iter().filter(|&&d| d == self.ambient_dim).count()
    }

    /// `Σ (−1)^dim F` over all faces.
    pub fn euler_sum(&self) -> BigInt {
        self.dims.iter().map(|&d| if d % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) }).sum()
    }
}

pub fn enumerate_faces(spec: &HyperplaneSpec) -> Result<FacePoset, OracleError> {
    enumerate_faces_with(spec, configured_cap(), Exec::default())
}

pub fn enumerate_faces_with(spec: &HyperplaneSpec, cap: usize, exec: Exec) -> Result<FacePoset, OracleError> {
    spec.validate()?;
    let n = spec.hyperplanes.len();
    if n > cap {
        return Err(OracleError::CapExceeded { count: n, cap });
    }
    let l = spec.ambient_dim;
    let total = 3usize.pow(n as u32);

    let found = exec.map_range(total, |mut code| {
        let mut signs = Vec::with_capacity(n);
        for _ in 0..n {
            signs.push([Sign::Minus, Sign::Zero, Sign::Plus][code % 3]);
            code /= 3;
        }
        let mut equalities = Vec::new();
        let mut strict = Vec::new();
        for (h, s) in spec.hyperplanes.iter().zip(&signs) {
            let c = Constraint::new(h.normal.clone(), h.offset.clone());
            match s {
                Sign::Zero => equalities.push(c),
                Sign::Plus => strict.push((c, Direction::Greater)),
                Sign::Minus => strict.push((c, Direction::Less)),
            }
        }
        if !fm_feasible(&equalities, &strict) {
            return None;
        }
        let rank = if equalities.is_empty() {
            0
        } else {
            let rows: Vec<Vec<Rational>> = equalities.into_iter().map(|c| c.coeffs).collect();
            rref(&RationalMatrix::from_rows(l, &rows)).rank
        };
        Some((SignVector(signs), l - rank))
    });

    let mut faces: Vec<(SignVector, usize)> = found.into_iter().flatten().collect();
    faces.sort();
    let psi = faces
        .iter()
        .map(|(sv, _)| {
            let z = sv.zero_set();
            if z.is_empty() {
                "X".to_string()
            } else {
                z.iter().map(|i| format!("h{i}")).collect::<Vec<_>>().join(".")
            }
        })
        .collect();
    let (faces, dims) = faces.into_iter().unzip();
    Ok(FacePoset { ambient_dim: l, central: spec.is_central(), faces, dims, psi })
}

/// `f_k` = number of faces of dimension `k`, for `k = 0..=l`.
pub fn oracle_f_vector(fp: &FacePoset) -> Vec<BigInt> {
    let mut f = vec![BigInt::zero(); fp.ambient_dim + 1];
    for &d in &fp.dims {
        f[d] += 1;
    }
    f
}

/// Number of face chains `F₁ ≥ F₂ ≥ … ≥ F_k` (closure order) with
/// `ψ(Fᵢ) = Yᵢ`, for a strictly increasing chain `Y₁ < … < Y_k` of flats.
pub fn fiber_count_direct(fp: &FacePoset, chain: &[&str]) -> Result<BigInt, OracleError> {
    if chain.is_empty() {
        return Err(OracleError::NotAChain("empty chain".into()));
    }
    let mut by_flat: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
    for (i, id) in fp.psi.iter().enumerate() {
        by_flat.entry(id.as_str()).or_default().push(i);
    }
    let mut levels = Vec::with_capacity(chain.len());
    for id in chain {
        let faces = by_flat.get(id).ok_or_else(|| OracleError::NotAChain(format!("`{id}` is not a flat")))?;
        levels.push(faces);
    }
    for (w, pair) in levels.windows(2).zip(chain.windows(2)) {
        // Y < Y' iff some (equivalently every) face of Y' lies in the closure of a face of Y
        // and the two flats differ
        let (lo, hi) = (w[0], w[1]);
        if pair[0] == pair[1] || !lo.iter().any(|&f| fp.leq(hi[0], f)) {
            return Err(OracleError::NotAChain(format!("`{}` is not below `{}`", pair[0], pair[1])));
        }
    }

    let mut counts: Vec<BigInt> = vec![BigInt::from(1); levels[0].len()];
    for w in levels.windows(2) {
        let (prev, next) = (w[0], w[1]);
        counts = next
            .iter()
            .map(|&g| prev.iter().zip(&counts).filter(|(&f, _)| fp.leq(g, f)).map(|(_, c)| c.clone()).sum())
            .collect();
    }
    Ok(counts.into_iter().sum())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientMode {
    Sphere,
    Projective,
}

/// Face counts of the induced cell structure on `S^l` or `ℝP^l`, from the
/// faces of a central arrangement in `ℝ^{l+1}`.
///
/// A face `F` of dimension `d ≥ 1` meets the sphere in one `(d−1)`-cell,
/// unless `F` is a line through the origin, which meets it in two points.
/// That only happens when the arrangement's common intersection is a line;
/// a common intersection of dimension ≥ 2 leaves a sphere with no vertex,
/// which is not a cell complex.
pub fn quotient_counts(central: &FacePoset, mode: QuotientMode) -> Result<Vec<BigInt>, OracleError> {
    if !central.central {
        return Err(OracleError::NotCentral);
    }
    let lineality = central.dims.iter().copied().min().unwrap_or(central.ambient_dim);
    if lineality >= 2 {
        return Err(OracleError::NotCellular(format!(
            "the hyperplanes share a {lineality}-dimensional subspace, so some sphere carries no vertex"
        )));
    }
    let l = central.ambient_dim.checked_sub(1).ok_or_else(|| OracleError::Precondition("ambient dimension 0".into()))?;
    let mut f = vec![BigInt::zero(); l + 1];
    for (sv, &d) in central.faces.iter().zip(&central.dims) {
        if d == 0 {
            continue;
        }
        let is_line = d == 1 && sv.0.iter().all(|s| *s == Sign::Zero);
        f[d - 1] += if is_line { 2 } else { 1 };
    }
    match mode {
        QuotientMode::Sphere => Ok(f),
        QuotientMode::Projective => {
            for sv in &central.faces {
                if central.faces.binary_search(&sv.negated()).is_err() {
                    return Err(OracleError::OddPairing(sv.to_string()));
                }
            }
            Ok(f.into_iter().map(|x| x / 2).collect())
        }
    }
}
