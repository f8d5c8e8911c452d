//! Simple functions (finite rational combinations of indicator functions of
//! flats and faces) and their integrals against a valuation.
//!
//! The lattice of sets generated by flats and faces is never built. A
//! simple function is stored over named generators and a valuation is an
//! assignment on those generators, which determines the integral.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use super::ArrangementModel;
use crate::exactmath::{IntPolynomial, RatPolynomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValuationError {
    #[error("valuation has no value for generator `{0}`")]
    MissingAssignment(String),
}

/// `Σ rᵢ I_{Aᵢ}` over named generators. Zero coefficients are never stored,
/// so equal functions compare equal however they were assembled.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SimpleFunction {
    terms: BTreeMap<String, Rational>,
}

impl SimpleFunction {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn indicator(generator: impl Into<String>) -> Self {
        let mut f = Self::zero();
        f.add_term(generator, Rational::one());
        f
    }

    pub fn add_term(&mut self, generator: impl Into<String>, coeff: Rational) {
        let generator = generator.into();
        let entry = self.terms.entry(generator.clone()).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&generator);
        }
    }

    /// Indicator of a disjoint union of generators.
    pub fn sum_of_indicators<I, S>(generators: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut f = Self::zero();
        for g in generators {
            f.add_term(g, Rational::one());
        }
        f
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        let mut f = Self::zero();
        for (g, r) in &self.terms {
            f.add_term(g.clone(), r * c);
        }
        f
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut f = self.clone();
        for (g, r) in &other.terms {
            f.add_term(g.clone(), r.clone());
        }
        f
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scaled(&-Rational::one()))
    }

    pub fn terms(&self) -> &BTreeMap<String, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, generator: &str) -> Rational {
        self.terms.get(generator).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// A valuation given by its values on generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Valuation {
    /// `ν = Poin_c(·, t)`.
    Poincare(BTreeMap<String, IntPolynomial>),
    /// `κ`, the combinatorial Euler characteristic.
    Euler(BTreeMap<String, BigInt>),
}

impl Valuation {
    /// `ν` on every flat of the model.
    pub fn poincare(m: &ArrangementModel) -> Self {
        Valuation::Poincare(m.flats().iter().map(|f| (f.id.clone(), f.poin_c.clone())).collect())
    }

    /// `κ` on every flat of the model.
    pub fn euler(m: &ArrangementModel) -> Self {
        Valuation::Euler(m.flats().iter().map(|f| (f.id.clone(), f.kappa.clone())).collect())
    }

    /// Adds an open cell of dimension `dim`: `ν = t^dim`, `κ = (−1)^dim`.
    pub fn insert_cell(&mut self, generator: impl Into<String>, dim: usize) {
        match self {
            Valuation::Poincare(m) => {
                m.insert(generator.into(), IntPolynomial::monomial(dim));
            }
            Valuation::Euler(m) => {
                let v = if dim.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
                m.insert(generator.into(), v);
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Integral {
    Scalar(Rational),
    Polynomial(RatPolynomial),
}

impl Integral {
    /// The polynomial with integer coefficients, if it is one.
    pub fn as_int_polynomial(&self) -> Option<IntPolynomial> {
        match self {
            Integral::Polynomial(p) if p.coeffs().iter().all(|c| c.is_integer()) => {
                Some(p.map(|c| c.to_integer()))
            }
            _ => None,
        }
    }

    pub fn as_scalar(&self) -> Option<&Rational> {
        match self {
            Integral::Scalar(r) => Some(r),
            Integral::Polynomial(_) => None,
        }
    }
}

/// `∫ f dv = Σ coeff × v(generator)`.
pub fn integrate(f: &SimpleFunction, v: &Valuation) -> Result<Integral, ValuationError> {
    let missing = |g: &String| ValuationError::MissingAssignment(g.clone());
    match v {
        Valuation::Euler(values) => {
            let mut total = Rational::zero();
            for (g, r) in f.terms() {
                total += r * Rational::from_integer(values.get(g).ok_or_else(|| missing(g))?.clone());
            }
            Ok(Integral::Scalar(total))
        }
        Valuation::Poincare(values) => {
            let mut total = RatPolynomial::zero();
            for (g, r) in f.terms() {
                let p = values.get(g).ok_or_else(|| missing(g))?;
                total = &total + &p.to_rational().scale(r);
            }
            Ok(Integral::Polynomial(total))
        }
    }
}

/// Indicator of the union of all chambers, by Möbius inversion of
/// `I_X = Σ_{Y} I_{f(Y)}`: `Σ_Y μ(X, Y) I_Y` over flat generators.
pub fn complement_indicator(m: &ArrangementModel) -> SimpleFunction {
    let mut f = SimpleFunction::zero();
    for (y, mu) in m.mobius().row(m.ambient()) {
        f.add_term(m.flat(*y).id.clone(), Rational::from_integer(mu.clone()));
    }
    f
}
