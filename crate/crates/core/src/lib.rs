//! Exact and numerical machinery for the odd solutions of the degenerate third
//! Painleve equation that are holomorphic at the origin.
//!
//! The Taylor coefficients `u_{2n}(a)` are rational functions of `s = a^2`;
//! [`coeffs`] builds them exactly, [`genfun_a`] and [`genfun_b`] study their
//! expansions at `a = infinity` and `a = 0`, [`residues`] their partial
//! fractions, [`fence`] the 3-adic content of their numerators and
//! [`numerics`] the solution itself for complex `a`.

pub mod algebra;
pub mod coeffs;
pub mod error;
pub mod fence;
pub mod genfun_a;
pub mod genfun_b;
pub mod numerics;
pub mod reference;
pub mod residues;
pub mod series;

pub use error::{Error, Result};
