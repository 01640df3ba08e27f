//! Expansion of the coefficients at `a = infinity` through the generating
//! functions `A_k(z) = (-1)^k sum_n A_k[n] z^n`.

mod audit;
mod bridge;
mod closed;
mod growth;
mod tower;
mod wrat;

pub use audit::{delta_y, pmn1_audit, truncate_decimal, x_n, y_n, z_n, Pmn1Audit};
pub use bridge::{laurent_from_table, pk_from_ak, q_poly};
pub use closed::{a0_eval, a0_eval_checked, a1n_closed, a2n_closed, hyp_1_negm, inv_one_minus_2a0_closed};
pub use growth::{gamma_half, growth_check, k_limit, limit_constant, log_normalised, GrowthReport};
pub use tower::{a0_series, ak_rational, ak_series_direct, ak_series_from_rational, r_at_half, r_poly, write_bfile};
pub use wrat::WRat;
