//! Numerical integration and series summation used as independent oracles.

mod adaptive;
mod gauss_laguerre;
mod kronrod;
mod series;

pub use adaptive::{
    entropy_integral, integrate_halfline, integrate_interval, xlogx, IntegralResult, QuadratureSpec,
};
pub use gauss_laguerre::{
    gauss_laguerre_rule, generalized_gauss_laguerre_rule, GaussRule, MAX_NODES,
};
pub use series::{series_sum, SeriesResult};
