//! Exact Taylor coefficients `u_{2n}(s)` and their structural checks.

mod divisibility;
mod engine;
mod io;
mod structure;

pub use divisibility::{strange_divisibility, DivisibilityReport};
pub use engine::CoeffTable;
pub use io::{parse_table, write_table};
pub use structure::{
    check_positivity, decompose, m_of, predicted_exponents, predicted_structure, Decomposition,
};
