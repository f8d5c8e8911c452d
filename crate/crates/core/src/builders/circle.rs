use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use super::toric::frac;
use super::{BuildError, BuildOptions};
use crate::arrangement::{ArrangementModel, Family, FlatHandle, FlatNode};
use crate::exactmath::{IntPolynomial, Rational};

/// Points on `S¹`, given as fractions of a full turn.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircleSpec {
    pub points: Vec<Rational>,
}

impl CircleSpec {
    pub fn new(points: Vec<Rational>) -> Self {
        CircleSpec { points }
    }

    pub fn validate(&self) -> Result<(), BuildError> {
        if self.points.is_empty() {
            return Err(BuildError::EmptySpec);
        }
        let mut seen = BTreeMap::new();
        for (i, p) in self.points.iter().enumerate() {
            if let Some(j) = seen.insert(frac(p), i) {
                return Err(BuildError::DuplicatePoint(j, i));
            }
        }
        Ok(())
    }
}

pub fn build_circle(spec: &CircleSpec) -> Result<ArrangementModel, BuildError> {
    spec.validate()?;
    let opts = BuildOptions::default();
    let one = IntPolynomial::constant(BigInt::one());
    let mut nodes = vec![FlatNode::new("X", 1, &one + &IntPolynomial::monomial(1), FlatHandle::Ambient)];
    let mut pairs = Vec::new();
    for (i, p) in spec.points.iter().enumerate() {
        nodes.push(FlatNode::new(format!("p{i}"), 0, one.clone(), FlatHandle::Circle { angle: frac(p) }));
        pairs.push((0, i + 1));
    }
    Ok(ArrangementModel::with_exec(1, Family::Circle, nodes, &pairs, opts.exec)?)
}
