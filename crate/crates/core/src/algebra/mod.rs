//! Exact algebra: polynomials, factored denominators, rational functions and
//! partial fractions in the variable `s = a^2`.

mod denom;
mod linsolve;
mod partial;
mod poly;
mod ratfunc;
mod ring;

pub use denom::FactoredDenom;
pub use linsolve::solve_linear;
pub use partial::{content_and_val3, val_p, PartialFractions};
pub use poly::{int_poly_mul, schoolbook, Poly, PolyQ, PolyZ};
pub use ratfunc::{RatFunc, RatFuncQ, RatFuncZ};
pub use ring::{binom, q, Ring};

/// Exact rational numbers.
pub type ExactRational = rug::Rational;
