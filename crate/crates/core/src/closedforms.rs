//! Closed-form face counts for simple arrangements.
//!
//! All formulas take the census `a_j` = number of flats of *dimension* `j`.
//! For simple arrangements the general f-vector formula collapses to
//! `f_k = Σ_j (−1)^j κ_j a_j C(l−j, l−k)` where `κ_j` is the Euler
//! characteristic of a `j`-dimensional flat, and each family below is that
//! sum with its own `κ_j`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::arrangement::{ArrangementModel, Family};

/// `a[j]` = number of flats of dimension `j`; `a.len()` = ambient dim + 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankCensus {
    pub a: Vec<BigInt>,
}

impl RankCensus {
    pub fn new(a: Vec<BigInt>) -> Self {
        RankCensus { a }
    }

    pub fn of_model(m: &ArrangementModel) -> Self {
        RankCensus { a: m.dimension_census().into_iter().map(BigInt::from).collect() }
    }

    fn get(&self, j: usize) -> BigInt {
        self.a.get(j).cloned().unwrap_or_default()
    }
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// `Σ_{j=0}^{k} a_j C(l−j, l−k)`.
pub fn f_simple_hyperplane(a: &RankCensus, l: usize, k: usize) -> BigInt {
    assert!(k <= l, "k = {k} exceeds l = {l}");
    (0..=k).map(|j| a.get(j) * binomial(l - j, l - k)).sum()
}

/// `a₀ C(l, l−k)`.
pub fn f_simple_toric(a0: &BigInt, l: usize, k: usize) -> BigInt {
    assert!(k <= l, "k = {k} exceeds l = {l}");
    a0 * binomial(l, l - k)
}

/// `2 Σ_{j=2, even}^{k} a_j C(l−j, l−k) + a₀ C(l, k)`.
pub fn f_simple_sphere(a: &RankCensus, l: usize, k: usize) -> BigInt {
    assert!(k <= l, "k = {k} exceeds l = {l}");
    let spheres: BigInt = (2..=k).step_by(2).map(|j| a.get(j) * binomial(l - j, l - k)).sum();
    BigInt::from(2) * spheres + a.get(0) * binomial(l, k)
}

/// `Σ_{j=0, even}^{k} C(n, l−j) C(l−j, l−k)` for `n` projective hyperplanes
/// in general position in `ℝP^l`.
pub fn f_buck_projective(n: usize, l: usize, k: usize) -> BigInt {
    assert!(k <= l, "k = {k} exceeds l = {l}");
    (0..=k).step_by(2).map(|j| binomial(n, l - j) * binomial(l - j, l - k)).sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Refuse input that does not satisfy the formula's hypotheses.
    Validated,
    /// Evaluate regardless (for guard tests).
    Forced,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosedFormError {
    #[error("the arrangement is not simple (some interval of the intersection poset is not Boolean)")]
    NotSimple,
    #[error("the hyperplanes are not in general position")]
    NotGeneralPosition,
    #[error("no closed form for the {0} family")]
    Unsupported(Family),
}

/// The family's closed-form f-vector `(f₀, …, f_l)` for a built model.
pub fn closed_form_f_vector(m: &ArrangementModel, mode: Mode) -> Result<Vec<BigInt>, ClosedFormError> {
    let l = m.ambient_dim();
    let census = RankCensus::of_model(m);
    if mode == Mode::Validated && !m.is_simple() {
        return Err(ClosedFormError::NotSimple);
    }
    let f: Vec<BigInt> = match m.family() {
        Family::Hyperplane => (0..=l).map(|k| f_simple_hyperplane(&census, l, k)).collect(),
        Family::Toric => (0..=l).map(|k| f_simple_toric(&census.get(0), l, k)).collect(),
        Family::Sphere => (0..=l).map(|k| f_simple_sphere(&census, l, k)).collect(),
        Family::Projective => {
            let n = census.get(l.saturating_sub(1)).try_into().unwrap_or(0usize);
            let general = (0..=l).all(|j| census.get(j) == binomial(n, l - j));
            if mode == Mode::Validated && !general {
                return Err(ClosedFormError::NotGeneralPosition);
            }
            (0..=l).map(|k| f_buck_projective(n, l, k)).collect()
        }
        other => return Err(ClosedFormError::Unsupported(other)),
    };
    Ok(f)
}

/// `Σ (−1)^k f_k`.
pub fn alternating_sum(f: &[BigInt]) -> BigInt {
    f.iter().enumerate().map(|(k, x)| if k % 2 == 0 { x.clone() } else { -x }).sum()
}

/// Ambient `κ(X)` for a family of the given dimension; the target of the
/// Euler relation `Σ (−1)^k f_k = κ(X)`.
pub fn ambient_kappa(family: Family, l: usize) -> Option<BigInt> {
    let sign = if l.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    match family {
        Family::Hyperplane => Some(sign),
        Family::Toric => Some(if l == 0 { BigInt::one() } else { BigInt::zero() }),
        Family::Sphere | Family::Circle => Some(BigInt::one() + sign),
        Family::Projective => Some(if l.is_multiple_of(2) { BigInt::one() } else { BigInt::zero() }),
        Family::Abstract => None,
    }
}
