//! The solution `u(tau; a, b)` in floating point: Taylor seeding at the
//! origin, adaptive continuation along rays, the large-`tau` connection
//! formulas and the positivity and symmetry scans.

mod asymptotic;
mod compare;
mod gamma;
mod monodromy;
mod ode;
mod param;
pub mod real;
mod series;

pub use asymptotic::{AsymptoticEvaluator, Form};
pub use compare::{
    compare_asymptotics, fit_phase, oddness_check, positivity_scan, rotation_check, series_ode_agreement,
    window_sup_error, write_comparison_csv, ComparisonReport, ComparisonSample, Component, PhaseFit,
    PositivityReport, SymmetryReport,
};
pub use gamma::{arg_gamma, gamma};
pub use monodromy::{monodromy_params, Gate, MonodromyParams};
pub use ode::{eval_ode, eval_ode_ray, Ray, Trajectory};
pub use param::CParam;
pub use real::{Mp, Real};
pub use series::{coefficients, eval_series, Precision, SeriesValue, SolutionEvaluator};
