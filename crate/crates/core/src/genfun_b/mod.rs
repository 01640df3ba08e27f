//! Expansion of the coefficients at `a = 0` through `B(a, x) = sum_k a^{2k} B_k(x)`.

mod closed;
mod solve;
mod xrat;

pub use closed::{b_series_from_table, closed_forms_pk, closed_forms_u2nk};
pub use solve::{b0, b_operator, b_rhs, b_tower, integrable_defect, integrable_solution, reduced_rhs, solve_b_equation, solve_b_ode};
pub use xrat::{RationalAnsatz, XRat};
