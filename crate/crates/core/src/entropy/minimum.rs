//! Minimum over temperature of the closed-form thermal Wehrl entropy.
//!
//! With `tau = e^{-beta}`, stationarity of
//! `1 - ln(1 - tau) + m(-ln tau + tau - tau^2)` reduces to the cubic
//! `2m tau^3 - 3m tau^2 + (2m + 1) tau - m = 0`, which has a single root in
//! `(0, 1)`.

use serde::{Deserialize, Serialize};

use crate::entropy::wehrl::{wehrl_thermal_paper, wehrl_thermal_paper_derivative};
use crate::error::{Error, Result};
use crate::optimize::{golden_section_min, newton_bracketed};
use crate::phase_space::ThermalParams;

/// Tolerance within which the closed-form and Newton roots must agree.
pub const ROOT_AGREEMENT_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MinimumSolution {
    pub m: u32,
    pub tau: f64,
    pub beta_min: f64,
    pub t_min: f64,
    pub s_min: f64,
    pub tau_closed_form: f64,
    pub tau_newton: f64,
    pub cubic_residual: f64,
    /// Minimizer of the entropy found by golden-section search over `beta`.
    pub beta_golden: f64,
    /// False when the two root computations disagree beyond
    /// [`ROOT_AGREEMENT_TOL`].
    pub consistent: bool,
}

pub fn cubic_residual(m: u32, tau: f64) -> f64 {
    let m = m as f64;
    ((2.0 * m * tau - 3.0 * m) * tau + (2.0 * m + 1.0)) * tau - m
}

/// The Cardano-type closed form
/// `tau_m = 1/2 + A^{1/3} - (2 + m) / (12 m A^{1/3})`,
/// `A = sqrt(28 + 8/m^3 + 39/m^2 - 48/m) / (24 sqrt 3) + (m - 1)/(8m)`.
pub fn tau_closed_form(m: u32) -> f64 {
    let mf = m as f64;
    let radicand = 28.0 + 8.0 / mf.powi(3) + 39.0 / (mf * mf) - 48.0 / mf;
    let a = radicand.sqrt() / (24.0 * 3.0_f64.sqrt()) + (mf - 1.0) / (8.0 * mf);
    let cbrt = a.cbrt();
    0.5 + cbrt - (2.0 + mf) / (12.0 * mf * cbrt)
}

/// Root of the cubic on `(0, 1)` by safeguarded Newton iteration.
pub fn tau_newton(m: u32) -> Result<f64> {
    let mf = m as f64;
    newton_bracketed(
        |t| {
            let f = cubic_residual(m, t);
            let df = 6.0 * mf * t * t - 6.0 * mf * t + 2.0 * mf + 1.0;
            (f, df)
        },
        0.0,
        1.0,
        1e-16,
    )
}

// S(beta) - S(c), accurate for beta near c.
fn entropy_increment(m: u32, beta: f64, c: f64) -> f64 {
    let d = beta - c;
    let ec = (-c).exp();
    let de = ec * (-d).exp_m1();
    let de2 = ec * ec * (-2.0 * d).exp_m1();
    let dlog = (-de / (1.0 - ec)).ln_1p();
    -dlog + m as f64 * (d + de - de2)
}

pub fn min_entropy(m: u32) -> Result<MinimumSolution> {
    if m == 0 {
        return Err(Error::domain(
            "min_entropy",
            "m = 0 has no interior minimum (the entropy decreases monotonically in beta)",
        ));
    }
    let closed = tau_closed_form(m);
    let newton = tau_newton(m)?;
    let consistent = (closed - newton).abs() <= ROOT_AGREEMENT_TOL;
    let tau = newton;
    let beta_min = -tau.ln();
    let th = ThermalParams::new(beta_min)?;

    let coarse = golden_section_min(
        |b| wehrl_thermal_paper(m, &ThermalParams::new(b).expect("positive beta")),
        1e-6,
        40.0,
        1e-10,
    );
    let c = coarse.argument;
    let width = 1e-5 * c.max(1.0);
    let fine = golden_section_min(
        |b| entropy_increment(m, b, c),
        (c - width).max(1e-9),
        c + width,
        1e-15 * c.max(1e-3),
    );

    Ok(MinimumSolution {
        m,
        tau,
        beta_min,
        t_min: 1.0 / beta_min,
        s_min: wehrl_thermal_paper(m, &th),
        tau_closed_form: closed,
        tau_newton: newton,
        cubic_residual: cubic_residual(m, tau).abs(),
        beta_golden: fine.argument,
        consistent,
    })
}

/// Stationarity check: `|dS/d beta|` at the reported minimum.
pub fn stationarity_residual(sol: &MinimumSolution) -> f64 {
    wehrl_thermal_paper_derivative(sol.m, sol.beta_min).abs()
}
