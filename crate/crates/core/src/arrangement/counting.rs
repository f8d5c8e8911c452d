use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::ArrangementModel;
use crate::exactmath::IntPolynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    /// A count came out negative: the model is not cellular. Never clamped.
    #[error("{quantity} evaluated to {value}; the model violates the cellularity assumption")]
    NegativeCount { quantity: String, value: BigInt },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("not a chain: {0}")]
    NotAChain(String),
}

fn alternating(k: usize) -> BigInt {
    if k.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `p(A, t) = Σ_Y μ(X, Y) Poin_c(Y, t)`.
pub fn generalized_char_poly(m: &ArrangementModel) -> IntPolynomial {
    m.mobius()
        .row(m.ambient())
        .iter()
        .fold(IntPolynomial::zero(), |acc, (y, mu)| &acc + &m.flat(*y).poin_c.scale(mu))
}

/// Number of chambers of the arrangement induced on the flat `y`:
/// `(−1)^{dim Y} Σ_{Z ≥ Y} μ(Y, Z) κ(Z)`.
pub fn chambers_of_restriction(m: &ArrangementModel, y: usize) -> Result<BigInt, CountError> {
    let sum: BigInt = m.mobius().row(y).iter().map(|(z, mu)| mu * &m.flat(*z).kappa).sum();
    let count = alternating(m.flat(y).dim) * sum;
    if count.is_negative() {
        return Err(CountError::NegativeCount { quantity: format!("chamber count of `{}`", m.flat(y).id), value: count });
    }
    Ok(count)
}

/// `(−1)^l Σ_Y μ(X, Y) κ(Y)`.
pub fn chamber_count(m: &ArrangementModel) -> Result<BigInt, CountError> {
    chambers_of_restriction(m, m.ambient())
}

/// Face numbers `f₀ … f_l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector {
    pub counts: Vec<BigInt>,
}

impl FVector {
    /// `Σ_k f_k x^{l−k}`.
    pub fn f_polynomial(&self) -> IntPolynomial {
        IntPolynomial::new(self.counts.iter().rev().cloned().collect())
    }

    /// `Σ_k (−1)^k f_k`.
    pub fn euler_characteristic(&self) -> BigInt {
        self.counts.iter().enumerate().map(|(k, f)| alternating(k) * f).sum()
    }

    pub fn chambers(&self) -> &BigInt {
        self.counts.last().expect("f-vector has at least f_0")
    }
}

/// `f_k = Σ_{dim Y = k} (−1)^k Σ_{Z ≥ Y} μ(Y, Z) κ(Z)`.
pub fn f_vector(m: &ArrangementModel) -> Result<FVector, CountError> {
    let mut counts = vec![BigInt::zero(); m.ambient_dim() + 1];
    for y in 0..m.flats().len() {
        counts[m.flat(y).dim] += chambers_of_restriction(m, y)?;
    }
    Ok(FVector { counts })
}

/// f-polynomial through absolute Möbius values; valid when every interval
/// is a geometric lattice (so μ alternates in sign):
/// `Σ_Z κ(Z) Σ_{Y ≤ Z} (−1)^{dim Z} |μ(Y, Z)| x^{l − dim Y}`.
pub fn f_polynomial_geometric(m: &ArrangementModel) -> Result<IntPolynomial, CountError> {
    if !m.intervals_are_geometric() {
        return Err(CountError::PreconditionFailed("some interval of the intersection poset is not a geometric lattice".into()));
    }
    let l = m.ambient_dim();
    let mut coeffs = vec![BigInt::zero(); l + 1];
    for y in 0..m.flats().len() {
        let exp = l - m.flat(y).dim;
        for (z, mu) in m.mobius().row(y) {
            let fz = m.flat(*z);
            coeffs[exp] += &fz.kappa * alternating(fz.dim) * mu.abs();
        }
    }
    Ok(IntPolynomial::new(coeffs))
}

/// f-polynomial of a simple arrangement (all intervals Boolean):
/// `Σ_Z κ(Z) (−1)^{dim Z} (x + 1)^{l − dim Z}`.
pub fn f_polynomial_simple(m: &ArrangementModel) -> Result<IntPolynomial, CountError> {
    if !m.is_simple() {
        return Err(CountError::PreconditionFailed("some interval of the intersection poset is not Boolean".into()));
    }
    let l = m.ambient_dim();
    let x_plus_one = IntPolynomial::new(vec![BigInt::one(), BigInt::one()]);
    Ok(m.flats().iter().fold(IntPolynomial::zero(), |acc, z| {
        let weight = &z.kappa * alternating(z.dim);
        &acc + &x_plus_one.pow((l - z.dim) as u32).scale(&weight)
    }))
}

/// Size of the preimage of the chain `Y₁ < … < Y_k` (`k ≥ 2`) under the
/// map sending a face to the smallest flat containing it:
/// `Π_{i<k} Σ_{Yᵢ ≤ Z ≤ Yᵢ₊₁} |μ(Yᵢ, Z)| · |Σ_{Z ≥ Y_k} μ(Y_k, Z) κ(Z)|`.
pub fn bayer_sturmfels_fiber(m: &ArrangementModel, chain: &[usize]) -> Result<BigInt, CountError> {
    let p = m.poset();
    if chain.len() < 2 {
        return Err(CountError::NotAChain(format!("need at least 2 flats, got {}", chain.len())));
    }
    if let Some(w) = chain.windows(2).find(|w| !p.lt(w[0], w[1])) {
        return Err(CountError::NotAChain(format!("`{}` is not strictly below `{}`", p.id(w[0]), p.id(w[1]))));
    }
    let mut total = BigInt::one();
    for w in chain.windows(2) {
        let local: BigInt = p.interval_elements(w[0], w[1]).into_iter().map(|z| m.mobius().mu(w[0], z).abs()).sum();
        total *= local;
    }
    let last = *chain.last().unwrap();
    let tail: BigInt = m.mobius().row(last).iter().map(|(z, mu)| mu * &m.flat(*z).kappa).sum();
    Ok(total * tail.abs())
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::arrangement::{Family, FlatHandle, FlatNode};

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// Hand-assembled model: `(id, dim, Poin_c)` nodes plus covers.
    pub(crate) fn hand_model(l: usize, family: Family, nodes: &[(&str, usize, &[i64])], covers: &[(&str, &str)]) -> ArrangementModel {
        let flats: Vec<FlatNode> = nodes.iter().map(|(id, d, p)| FlatNode::new(*id, *d, poly(p), FlatHandle::Abstract)).collect();
        let idx = |s: &str| nodes.iter().position(|n| n.0 == s).unwrap();
        let pairs: Vec<_> = covers.iter().map(|(a, b)| (idx(a), idx(b))).collect();
        ArrangementModel::new(l, family, flats, &pairs).unwrap()
    }

    pub(crate) fn two_great_circles() -> ArrangementModel {
        hand_model(
            2,
            Family::Sphere,
            &[("X", 2, &[1, 0, 1]), ("N1", 1, &[1, 1]), ("N2", 1, &[1, 1]), ("p", 0, &[1]), ("q", 0, &[1])],
            &[("X", "N1"), ("X", "N2"), ("N1", "p"), ("N1", "q"), ("N2", "p"), ("N2", "q")],
        )
    }

    pub(crate) fn torus_example() -> ArrangementModel {
        let mut covers = vec![("X", "N1"), ("X", "N2"), ("X", "N3")];
        for n in ["N1", "N2", "N3"] {
            for p in ["p1", "p2", "p3"] {
                covers.push((n, p));
            }
        }
        hand_model(
            2,
            Family::Toric,
            &[
                ("X", 2, &[1, 2, 1]),
                ("N1", 1, &[1, 1]),
                ("N2", 1, &[1, 1]),
                ("N3", 1, &[1, 1]),
                ("p1", 0, &[1]),
                ("p2", 0, &[1]),
                ("p3", 0, &[1]),
            ],
            &covers,
        )
    }

    pub(crate) fn axes() -> ArrangementModel {
        hand_model(
            2,
            Family::Hyperplane,
            &[("X", 2, &[0, 0, 1]), ("xa", 1, &[0, 1]), ("ya", 1, &[0, 1]), ("o", 0, &[1])],
            &[("X", "xa"), ("X", "ya"), ("xa", "o"), ("ya", "o")],
        )
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(generalized_char_poly(&two_great_circles()), poly(&[1, -2, 1]));
        assert_eq!(generalized_char_poly(&torus_example()), poly(&[4, -1, 1]));
        let empty = hand_model(3, Family::Hyperplane, &[("X", 3, &[0, 0, 0, 1])], &[]);
        assert_eq!(generalized_char_poly(&empty), IntPolynomial::monomial(3));
    }

    #[test]
    fn chamber_examples() {
        assert_eq!(chamber_count(&torus_example()).unwrap(), BigInt::from(6));
        assert_eq!(chamber_count(&two_great_circles()).unwrap(), BigInt::from(4));
        // one point on S¹: (−1)¹ (κ(S¹) − κ(p)) = (−1)(0 − 1) = 1
        let circle = hand_model(1, Family::Circle, &[("S1", 1, &[1, 1]), ("p", 0, &[1])], &[("S1", "p")]);
        assert_eq!(chamber_count(&circle).unwrap(), BigInt::from(1));
    }

    #[test]
    fn negative_count_is_surfaced() {
        // κ(X) = −1, κ(p) = 2: (−1)(−1 − 2) = 3
        let ok = hand_model(1, Family::Abstract, &[("X", 1, &[0, 1]), ("p", 0, &[2])], &[("X", "p")]);
        assert_eq!(chamber_count(&ok).unwrap(), BigInt::from(3));
        // κ(X) = 3, κ(p) = 1: (−1)(3 − 1) = −2
        let bad = hand_model(1, Family::Abstract, &[("X", 1, &[3]), ("p", 0, &[1])], &[("X", "p")]);
        assert_eq!(
            chamber_count(&bad),
            Err(CountError::NegativeCount { quantity: "chamber count of `X`".into(), value: BigInt::from(-2) })
        );
        assert!(f_vector(&bad).is_err());
    }

    #[test]
    fn f_vector_examples() {
        let f = f_vector(&two_great_circles()).unwrap();
        assert_eq!(f.counts, ints(&[2, 4, 4]));
        assert_eq!(f.euler_characteristic(), BigInt::from(2));
        assert_eq!(f_vector(&torus_example()).unwrap().counts, ints(&[3, 9, 6]));
        let empty = hand_model(3, Family::Hyperplane, &[("X", 3, &[0, 0, 0, 1])], &[]);
        assert_eq!(f_vector(&empty).unwrap().counts, ints(&[0, 0, 0, 1]));
    }

    #[test]
    fn f_polynomial_examples() {
        assert_eq!(f_polynomial_geometric(&axes()).unwrap(), poly(&[4, 4, 1]));
        assert_eq!(f_polynomial_geometric(&two_great_circles()).unwrap(), poly(&[4, 4, 2]));
        let empty = hand_model(2, Family::Hyperplane, &[("X", 2, &[0, 0, 1])], &[]);
        assert_eq!(f_polynomial_geometric(&empty).unwrap(), poly(&[1]));
        assert_eq!(f_polynomial_simple(&empty).unwrap(), poly(&[1]));
        assert_eq!(f_polynomial_simple(&axes()).unwrap(), poly(&[4, 4, 1]));
        assert_eq!(f_polynomial_geometric(&torus_example()).unwrap(), poly(&[6, 9, 3]));
        // three circles through each vertex: not simple
        assert!(matches!(f_polynomial_simple(&torus_example()), Err(CountError::PreconditionFailed(_))));
    }

    #[test]
    fn non_geometric_interval_is_rejected() {
        // 0 < a < 1 is a chain of length 2: not atomic
        let m = hand_model(2, Family::Abstract, &[("X", 2, &[0, 0, 1]), ("a", 1, &[0, 1]), ("b", 0, &[1])], &[("X", "a"), ("a", "b")]);
        assert!(!m.intervals_are_geometric());
        assert!(matches!(f_polynomial_geometric(&m), Err(CountError::PreconditionFailed(_))));
    }

    #[test]
    fn fiber_examples() {
        let m = axes();
        let id = |s| m.index_of(s).unwrap();
        assert_eq!(bayer_sturmfels_fiber(&m, &[id("xa"), id("o")]).unwrap(), BigInt::from(2));
        assert_eq!(bayer_sturmfels_fiber(&m, &[id("X"), id("xa")]).unwrap(), BigInt::from(4));
        assert_eq!(bayer_sturmfels_fiber(&m, &[id("X"), id("xa"), id("o")]).unwrap(), BigInt::from(4));
        assert!(matches!(bayer_sturmfels_fiber(&m, &[id("X")]), Err(CountError::NotAChain(_))));
        assert!(matches!(bayer_sturmfels_fiber(&m, &[id("xa"), id("ya")]), Err(CountError::NotAChain(_))));
        // a chain ending on a circle of the torus: κ-sum over the circle is
        // 0 − 3 = −3, absolute value 3 vertices → 3 edges on that circle
        let t = torus_example();
        let tid = |s| t.index_of(s).unwrap();
        assert_eq!(bayer_sturmfels_fiber(&t, &[tid("X"), tid("N1")]).unwrap(), BigInt::from(6));
    }

    #[test]
    fn fiber_is_zero_when_nothing_sits_above() {
        // torus with a single circle marked non-cellular: κ(N) = 0 and nothing above
        let m = hand_model(2, Family::Abstract, &[("X", 2, &[1, 2, 1]), ("N", 1, &[1, 1])], &[("X", "N")]);
        assert_eq!(bayer_sturmfels_fiber(&m, &[0, 1]).unwrap(), BigInt::zero());
    }
}
