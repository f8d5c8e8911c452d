use num_traits::{Signed, Zero};

use super::matrix::dot;
use super::{solve_affine, AffineSolution, Rational, RationalMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// `coeffs · x > rhs`
    Greater,
    /// `coeffs · x < rhs`
    Less,
}

/// One linear constraint `coeffs · x (= | > | <) rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub rhs: Rational,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rational>, rhs: Rational) -> Self {
        Constraint { coeffs, rhs }
    }
}

/// Strict inequality `coeffs · y > rhs` during elimination.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Strict {
    coeffs: Vec<Rational>,
    rhs: Rational,
}

impl Strict {
    /// Scales so the first nonzero coefficient has magnitude 1; makes
    /// duplicate detection exact.
    fn normalized(mut self) -> Self {
        if let Some(lead) = self.coeffs.iter().find(|c| !c.is_zero()).map(Rational::abs) {
            for c in &mut self.coeffs {
                *c /= &lead;
            }
            self.rhs /= &lead;
        }
        self
    }
}

/// Decides whether `{x : equalities hold, every strict inequality holds}`
/// is nonempty, exactly.
///
/// Equalities are eliminated first by parametrizing their solution set;
/// the remaining strict system is projected one variable at a time. For
/// strict systems the projection is exact: the eliminated variable exists
/// iff every lower bound is below every upper bound.
pub fn fm_feasible(equalities: &[Constraint], strict: &[(Constraint, Direction)]) -> bool {
    let dim = equalities
        .iter()
        .map(|c| c.coeffs.len())
        .chain(strict.iter().map(|(c, _)| c.coeffs.len()))
        .next()
        .unwrap_or(0);
    debug_assert!(equalities.iter().all(|c| c.coeffs.len() == dim));
    debug_assert!(strict.iter().all(|(c, _)| c.coeffs.len() == dim));

    let a = RationalMatrix::from_rows(dim, &equalities.iter().map(|c| c.coeffs.clone()).collect::<Vec<_>>());
    let b: Vec<Rational> = equalities.iter().map(|c| c.rhs.clone()).collect();
    let (point, basis) = match solve_affine(&a, &b) {
        AffineSolution::Infeasible => return false,
        AffineSolution::Feasible { point, nullspace } => (point, nullspace),
    };

    // x = point + Σ y_k basis_k
    let mut system: Vec<Strict> = strict
        .iter()
        .map(|(c, dir)| {
            let coeffs: Vec<Rational> = basis.iter().map(|v| dot(&c.coeffs, v)).collect();
            let rhs = &c.rhs - dot(&c.coeffs, &point);
            match dir {
                Direction::Greater => Strict { coeffs, rhs },
                Direction::Less => Strict {
                    coeffs: coeffs.into_iter().map(|x| -x).collect(),
                    rhs: -rhs,
                },
            }
        })
        .collect();

    for var in (0..basis.len()).rev() {
        let mut keep = Vec::new();
        let mut lower = Vec::new();
        let mut upper = Vec::new();
        for s in system {
            match s.coeffs[var].signum() {
                x if x.is_zero() => keep.push(s),
                x if x.is_positive() => lower.push(s),
                _ => upper.push(s),
            }
        }
        // a one-sided variable can always be pushed far enough
        if !lower.is_empty() && !upper.is_empty() {
            for p in &lower {
                for q in &upper {
                    let (wp, wq) = (-&q.coeffs[var], p.coeffs[var].clone());
                    let coeffs = p.coeffs.iter().zip(&q.coeffs).map(|(x, y)| x * &wp + y * &wq).collect();
                    keep.push(Strict { coeffs, rhs: &p.rhs * &wp + &q.rhs * &wq });
                }
            }
        }
        system = Vec::with_capacity(keep.len());
        for s in keep {
            if s.coeffs.iter().all(Zero::is_zero) {
                if !s.rhs.is_negative() {
                    return false;
                }
            } else {
                system.push(s.normalized());
            }
        }
        system.sort();
        system.dedup();
    }
    system.iter().all(|s| s.rhs.is_negative())
}
