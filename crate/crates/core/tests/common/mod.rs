#![allow(dead_code)]

use dissect_core::builders::{CentralSpec, Hyperplane, HyperplaneSpec, ToricHypersurface, ToricSpec};
use dissect_core::exactmath::Rational;
use num_bigint::BigInt;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| x.into()).collect()
}

pub fn hyperplanes(l: usize, hs: &[(&[i64], i64)]) -> HyperplaneSpec {
    HyperplaneSpec::new(l, hs.iter().map(|(n, b)| Hyperplane::new(n.iter().map(|&x| q(x, 1)).collect(), q(*b, 1))).collect())
}

pub fn central(l: usize, normals: &[&[i64]]) -> CentralSpec {
    CentralSpec::new(l, normals.iter().map(|v| v.iter().map(|&x| q(x, 1)).collect()).collect())
}

/// The central arrangement in `ℝ^{l+1}` with the same normals.
pub fn as_hyperplanes(c: &CentralSpec) -> HyperplaneSpec {
    HyperplaneSpec::new(c.ambient_dim + 1, c.normals.iter().map(|v| Hyperplane::new(v.clone(), q(0, 1))).collect())
}

pub fn toric(l: usize, hs: &[(&[i64], (i64, i64))]) -> ToricSpec {
    ToricSpec::new(l, hs.iter().map(|(c, (n, d))| ToricHypersurface::new(c.iter().map(|&x| x.into()).collect(), q(*n, *d))).collect())
}
