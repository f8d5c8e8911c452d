use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{f_vector, ArrangementModel};

/// Outcome of the structural self-checks on a model. `euler_relation` is
/// `None` when the f-vector cannot be computed (a negative count).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StructureReport {
    /// `Σ_{x ≤ z ≤ y} μ(x, z) = 0` for every `x < y`.
    pub mobius_recursion: bool,
    /// Every interval is a geometric lattice.
    pub geometric_intervals: bool,
    /// `(−1)^{rk y − rk x} μ(x, y) > 0` for every `x ≤ y`.
    pub sign_alternation: bool,
    /// `Σ (−1)^k f_k = κ(X)`.
    pub euler_relation: Option<bool>,
}

impl StructureReport {
    pub fn all_pass(&self) -> bool {
        self.mobius_recursion && self.geometric_intervals && self.sign_alternation && self.euler_relation == Some(true)
    }
}

pub fn check_structure(m: &ArrangementModel) -> StructureReport {
    let p = m.poset();
    let mu = m.mobius();
    let mut recursion = true;
    let mut alternation = true;
    for x in 0..p.len() {
        for y in p.upper_set(x) {
            let value = mu.mu(x, y);
            let expected_sign = (p.rank(y) - p.rank(x)).is_multiple_of(2);
            if value.is_zero() || value.is_positive() != expected_sign {
                alternation = false;
            }
            if x != y {
                let sum: BigInt = p.interval_elements(x, y).into_iter().map(|z| mu.mu(x, z).clone()).sum();
                recursion &= sum.is_zero();
            }
        }
    }
    let euler = f_vector(m).ok().map(|f| f.euler_characteristic() == m.flat(m.ambient()).kappa);
    StructureReport {
        mobius_recursion: recursion,
        geometric_intervals: m.intervals_are_geometric(),
        sign_alternation: alternation,
        euler_relation: euler,
    }
}
