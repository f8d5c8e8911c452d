//! Exact arithmetic: rationals, integer polynomials, dense matrices over
//! ℚ and ℤ, Smith/Hermite normal forms and Fourier–Motzkin feasibility.
//!
//! Everything here is arbitrary precision. No floating point is used
//! anywhere in the crate.

mod fm;
mod matrix;
mod poly;
mod rational;
mod snf;

pub use fm::{fm_feasible, Constraint, Direction};
pub use matrix::{rref, solve_affine, AffineSolution, IntegerMatrix, Matrix, RationalMatrix, Rref};
pub use poly::{IntPolynomial, Polynomial, RatPolynomial};
pub use rational::{format_rational, parse_rational, ParseRationalError, Rational};
pub use snf::{hermite_normal_form, smith_normal_form, SmithForm};
