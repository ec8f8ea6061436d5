//! Characteristic functions, moments, large-deviation rate functions and the
//! photon-count distributions dual to the Husimi densities.

mod cf;
mod large_deviation;
mod moments;
mod photon;

pub use cf::{cf_pure, cf_quadrature, cf_thermal, ln_mgf_thermal};
pub use large_deviation::{
    finite_m_log_mgf, log_mgf_limit, paper_u_xi, rate_pure_limit, rate_pure_limit_numeric,
    rate_thermal, rate_thermal_numeric, RateEvaluation, SUP_BRACKET_LO, SUP_POLE_GAP,
};
pub use moments::{
    moments_pure, moments_quadrature, moments_thermal, paper_stated_variance,
    raw_moments_gauss_laguerre, MomentSource, MomentSummary,
};
pub use photon::{pmf_table, pmf_x, pmf_y, sample_pmf, CDF_CUTOFF};
