//! Tools for certifying the comparison theorem for `λ_s` numerically: the
//! auxiliary functions from its proof, exact series coefficients, worst-case
//! scans over `t`, threshold solvers and grid verification of each part.

mod analytic;
mod scan;
mod series;
mod threshold;
mod verify;

pub use analytic::{limit_ratio_at_t1, mu_nu_psi, phi, psi_derivative, psi_limit_at_one, tau, MuNuPsi};
pub use scan::{
    excess, sized_grid, small_t_curvature, standard_grid, violation, worst_case, worst_case_raw, Comparison, Side, WorstCase, SLACK,
};
pub use series::{series_c, series_d, SeriesTable};
pub use threshold::{
    bisect_root, solve_threshold, solve_threshold_on, standard_thresholds, tau_root, ThresholdResult, DEFAULT_INNER_POINTS,
    DEFAULT_TOLERANCE,
};
pub use verify::{verify_part, ClaimReport, PartReport, Violation, Witness, DEFAULT_S_POINTS, DEFAULT_T_POINTS, WITNESS_OFFSET};
