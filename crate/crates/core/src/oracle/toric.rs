use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::OracleError;
use crate::arrangement::{ArrangementModel, Family, FlatHandle};
use crate::exactmath::Rational;

fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Chambers of a 2-dimensional toric arrangement from `V − E + F = 0`.
///
/// Vertices are the 0-dimensional flats. Each circle (1-dimensional
/// component) `{x : c · x ≡ c · w (mod 1)}` with `c` primitive is cut into
/// as many arcs as vertices on it; membership is tested directly on the
/// witness points rather than through the poset order.
pub fn toric_chambers_2d(m: &ArrangementModel) -> Result<BigInt, OracleError> {
    if m.family() != Family::Toric || m.ambient_dim() != 2 {
        return Err(OracleError::Precondition(format!(
            "expected a 2-dimensional toric model, got {}-dimensional {}",
            m.ambient_dim(),
            m.family()
        )));
    }
    let witness = |i: usize| match &m.flat(i).handle {
        FlatHandle::Toric { witness, covectors, .. } => (witness.clone(), covectors.clone()),
        _ => unreachable!("toric models carry toric handles"),
    };
    let vertices: Vec<Vec<Rational>> = m.flats_of_dim(0).map(|i| witness(i).0).collect();
    if vertices.is_empty() {
        return Err(OracleError::NotCellular("the arrangement has no vertex".into()));
    }

    let mut edges = BigInt::zero();
    for c in m.flats_of_dim(1) {
        let (w, covectors) = witness(c);
        let cov = &covectors[0];
        let g = cov.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        let primitive: Vec<Rational> = cov.iter().map(|x| Rational::from_integer(x / &g)).collect();
        let on_circle = vertices
            .iter()
            .filter(|v| is_integer(&primitive.iter().zip(v.iter().zip(&w)).map(|(c, (a, b))| c * (a - b)).sum()))
            .count();
        if on_circle == 0 {
            return Err(OracleError::NotCellular(format!("circle `{}` has no vertex", m.flat(c).id)));
        }
        edges += on_circle;
    }
    Ok(edges - vertices.len())
}

/// Arcs cut from `S¹` by distinct points: one per point after reducing
/// angles modulo a full turn.
pub fn circle_arcs(points: &[Rational]) -> usize {
    points.iter().map(|p| p - p.floor()).collect::<BTreeSet<_>>().len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{build_hyperplane, build_toric, HyperplaneSpec, ToricHypersurface, ToricSpec};

    fn toric(hs: &[([i64; 2], (i64, i64))]) -> ArrangementModel {
        build_toric(&ToricSpec::new(
            2,
            hs.iter()
                .map(|(c, (n, d))| ToricHypersurface::new(c.iter().map(|&x| x.into()).collect(), Rational::new((*n).into(), (*d).into())))
                .collect(),
        ))
        .unwrap()
    }

    #[test]
    fn euler_counts() {
        assert_eq!(toric_chambers_2d(&toric(&[([1, 2], (0, 1)), ([2, 1], (0, 1)), ([1, -1], (0, 1))])).unwrap(), BigInt::from(6));
        assert_eq!(toric_chambers_2d(&toric(&[([1, 0], (0, 1)), ([0, 1], (0, 1))])).unwrap(), BigInt::from(1));
        assert_eq!(toric_chambers_2d(&toric(&[([1, 1], (0, 1)), ([1, -1], (0, 1))])).unwrap(), BigInt::from(2));
        assert_eq!(toric_chambers_2d(&toric(&[([2, 0], (0, 1)), ([0, 1], (0, 1))])).unwrap(), BigInt::from(2));
    }

    #[test]
    fn rejects_other_families() {
        let m = build_hyperplane(&HyperplaneSpec::new(2, vec![])).unwrap();
        assert!(matches!(toric_chambers_2d(&m), Err(OracleError::Precondition(_))));
    }

    #[test]
    fn arcs() {
        let q = |n: i64, d: i64| Rational::new(n.into(), d.into());
        assert_eq!(circle_arcs(&[q(0, 1), q(1, 2), q(3, 2)]), 2);
    }
}
