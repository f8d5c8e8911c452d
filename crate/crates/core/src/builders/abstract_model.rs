use num_bigint::BigInt;

use super::BuildError;
use crate::arrangement::{ArrangementModel, Family, FlatHandle, FlatNode};
use crate::exactmath::IntPolynomial;
use crate::Exec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbstractFlat {
    pub id: String,
    pub dim: usize,
    /// Coefficients of `Poin_c`, constant term first.
    pub poin_c: Vec<BigInt>,
}

/// A user-supplied intersection poset. `order` lists pairs `(a, b)` with
/// `a < b`, i.e. `b ⊆ a`; any generating set of the relation will do.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbstractSpec {
    pub ambient_dim: usize,
    pub flats: Vec<AbstractFlat>,
    pub order: Vec<(String, String)>,
}

/// No geometry is available to check cellularity, so the model is flagged
/// as asserted-cellular; a negative count downstream means the assertion
/// was wrong.
pub fn build_abstract(spec: &AbstractSpec) -> Result<ArrangementModel, BuildError> {
    if spec.flats.is_empty() {
        return Err(BuildError::EmptySpec);
    }
    let index = |id: &str| spec.flats.iter().position(|f| f.id == id);
    let mut pairs = Vec::with_capacity(spec.order.len());
    for (a, b) in &spec.order {
        let (Some(i), Some(j)) = (index(a), index(b)) else {
            let missing = if index(a).is_none() { a } else { b };
            return Err(crate::arrangement::ModelError::Poset(crate::poset::PosetError::UnknownElement(missing.clone())).into());
        };
        pairs.push((i, j));
    }
    let nodes = spec
        .flats
        .iter()
        .map(|f| FlatNode::new(f.id.clone(), f.dim, IntPolynomial::new(f.poin_c.clone()), FlatHandle::Abstract))
        .collect();
    Ok(ArrangementModel::with_exec(spec.ambient_dim, Family::Abstract, nodes, &pairs, Exec::default())?.assert_cellular())
}
