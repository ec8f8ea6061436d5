//! Limiting log-moment generating functions and their Legendre-Fenchel
//! transforms (rate functions).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::optimize::golden_section_max;
use crate::phase_space::ThermalParams;
use crate::statistics::cf::ln_mgf_thermal;

/// Lower end of the bracket used by the numerical suprema.
pub const SUP_BRACKET_LO: f64 = -50.0;
/// Gap kept between the bracket and the pole at `u = eta`.
pub const SUP_POLE_GAP: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RateEvaluation {
    pub xi: f64,
    pub u_star: f64,
    pub value: f64,
}

/// `Lambda_beta(u) = ln((eta - u e^{-beta}) / (eta - u))` for `u < eta`.
pub fn log_mgf_limit(th: &ThermalParams, u: f64) -> Result<f64> {
    let eta = th.eta();
    if !(u < eta) {
        return Err(Error::domain(
            "log_mgf_limit",
            format!("u = {u} must be below eta = {eta}"),
        ));
    }
    let decay = (-th.beta()).exp();
    Ok((-(u * decay) / eta).ln_1p() - (-u / eta).ln_1p())
}

/// `(1/m) ln E e^{u Q_beta^{(m)}}`, the finite-`m` quotient whose limit is
/// [`log_mgf_limit`].
pub fn finite_m_log_mgf(m: u32, th: &ThermalParams, u: f64) -> Result<f64> {
    if m == 0 {
        return Err(Error::domain("finite_m_log_mgf", "m must be >= 1"));
    }
    if !(u < th.eta()) {
        return Err(Error::domain("finite_m_log_mgf", "u must be below eta"));
    }
    Ok(ln_mgf_thermal(m, th, u) / m as f64)
}

// Lambda(u) - Lambda(c), accurate when u is close to c.
fn log_mgf_increment(th: &ThermalParams, u: f64, c: f64) -> f64 {
    let eta = th.eta();
    let decay = (-th.beta()).exp();
    let d = u - c;
    (-(d * decay) / (eta - c * decay)).ln_1p() - (-d / (eta - c)).ln_1p()
}

/// Rate function `sup_{u < eta} (xi u - Lambda_beta(u))`.
///
/// The supremum sits at the smaller root of
/// `xi e^{-beta} u^2 - xi eta (1 + e^{-beta}) u + (xi - 1) eta^2 = 0`,
/// the stationarity condition of `xi u - Lambda_beta(u)`.
pub fn rate_thermal(th: &ThermalParams, xi: f64) -> Result<RateEvaluation> {
    if !(xi > 0.0) {
        return Err(Error::domain(
            "rate_thermal",
            format!("xi = {xi} must be > 0"),
        ));
    }
    let eta = th.eta();
    let decay = (-th.beta()).exp();
    let a = xi * decay;
    let b = xi * eta * (1.0 + decay);
    let c = (xi - 1.0) * eta * eta;
    // b^2 - 4ac = eta^2 xi (xi eta^2 + 4 e^{-beta}), never negative
    let disc = eta * (xi * (xi * eta * eta + 4.0 * decay)).sqrt();
    // smaller root without cancellation: (b - sqrt(D)) / 2a = 2c / (b + sqrt(D))
    let u_star = 2.0 * c / (b + disc);
    debug_assert!(u_star < eta && a > 0.0);
    let value = (xi * u_star - log_mgf_limit(th, u_star)?).max(0.0);
    Ok(RateEvaluation { xi, u_star, value })
}

/// The closed-form maximizer as originally stated. It omits a
/// `xi eta e^{-beta}` term in the numerator, which shows up as
/// `u_xi = -eta/2` at `xi = 1` where the supremum is attained at `u = 0`.
pub fn paper_u_xi(th: &ThermalParams, xi: f64) -> f64 {
    let e = (-th.beta()).exp();
    let inner = xi * xi * (1.0 - 4.0 * e + 6.0 * e * e - 4.0 * e.powi(3) + e.powi(4))
        + xi * (4.0 * e - 8.0 * e * e + 4.0 * e.powi(3));
    (xi * (1.0 - e) - inner.sqrt()) / (2.0 * xi * e)
}

/// The rate function computed by golden-section search instead of the
/// quadratic. A coarse pass over `[-50, eta - 1e-12]` is followed by a pass
/// on a small bracket where the objective is evaluated as an increment from
/// the coarse optimum, which resolves the argument to near machine precision.
pub fn rate_thermal_numeric(th: &ThermalParams, xi: f64) -> Result<RateEvaluation> {
    if !(xi > 0.0) {
        return Err(Error::domain(
            "rate_thermal_numeric",
            format!("xi = {xi} must be > 0"),
        ));
    }
    let eta = th.eta();
    let hi = eta - SUP_POLE_GAP;
    let objective = |u: f64| xi * u - log_mgf_limit(th, u).unwrap_or(f64::INFINITY);
    let coarse = golden_section_max(objective, SUP_BRACKET_LO, hi, 1e-10);
    let c = coarse.argument;
    let width = 1e-6 * c.abs().max(1.0);
    let fine = golden_section_max(
        |u| xi * (u - c) - log_mgf_increment(th, u, c),
        c - width,
        (c + width).min(hi),
        1e-15 * c.abs().max(1e-3),
    );
    let u_star = fine.argument;
    Ok(RateEvaluation {
        xi,
        u_star,
        value: xi * u_star - log_mgf_limit(th, u_star)?,
    })
}

/// `xi - 1 - ln xi`, the transform of `-ln(1 - u)`.
pub fn rate_pure_limit(xi: f64) -> Result<f64> {
    if !(xi > 0.0) {
        return Err(Error::domain(
            "rate_pure_limit",
            format!("xi = {xi} must be > 0"),
        ));
    }
    Ok(xi - 1.0 - xi.ln())
}

/// `sup_{u < 1} (xi u + ln(1 - u))` by golden-section search.
pub fn rate_pure_limit_numeric(xi: f64) -> Result<f64> {
    if !(xi > 0.0) {
        return Err(Error::domain(
            "rate_pure_limit_numeric",
            format!("xi = {xi} must be > 0"),
        ));
    }
    let r = golden_section_max(
        |u| xi * u + (-u).ln_1p(),
        SUP_BRACKET_LO,
        1.0 - SUP_POLE_GAP,
        1e-13,
    );
    Ok(r.value)
}
