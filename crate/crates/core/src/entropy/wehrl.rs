use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::phase_space::{make_density, DensityKind, RadialDensity, ThermalParams};
use crate::quadrature::{entropy_integral, QuadratureSpec};
use crate::specfun::{digamma_int_plus_one, ln_factorial};

/// Lower bound on the Wehrl entropy of any state.
pub const LIEB_BOUND: f64 = 1.0;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntropyReport {
    pub subject: DensityKind,
    pub numeric_value: f64,
    pub paper_value: Option<f64>,
    pub formula_id: String,
    pub abs_diff: Option<f64>,
}

/// `-int q ln q` over the radial variable, split at the density's zeros.
pub fn wehrl_numeric(d: &RadialDensity, spec: &QuadratureSpec) -> Result<f64> {
    Ok(entropy_integral(|t| d.eval(t), d.zero_set(), d.decay_rate(), spec)?.value)
}

/// `1 + j + ln j! - j psi(j + 1)`: the Gamma-density entropy of `Q_j^{(0)}`,
/// and by the `m <-> j` symmetry also that of `Q_0^{(j)}`.
pub fn wehrl_pure_m0(j: u32) -> f64 {
    1.0 + j as f64 + ln_factorial(j) - j as f64 * digamma_int_plus_one(j)
}

/// Large-index leading term
/// `ln((2 pi / e) n^{|m-j|+1} / (N + 1)^{|m-j|})` (`n = min`, `N = max`) and
/// the accompanying bound `ln(2 pi n / e)`. The neglected term is only known
/// to vanish asymptotically.
pub fn wehrl_pure_asymptotic(m: u32, j: u32) -> Result<(f64, f64)> {
    let (n, big) = (m.min(j), m.max(j));
    if n == 0 {
        return Err(Error::domain(
            "wehrl_pure_asymptotic",
            "expression degenerates when min(m, j) = 0",
        ));
    }
    let alpha = (big - n) as f64;
    let base = (2.0 * std::f64::consts::PI).ln() - 1.0;
    let value = base + (alpha + 1.0) * (n as f64).ln() - alpha * (big as f64 + 1.0).ln();
    let bound = base + (n as f64).ln();
    Ok((value, bound))
}

/// Closed form for the thermal state,
/// `1 - ln(1 - e^{-beta}) + m (beta + e^{-beta} - e^{-2 beta})`.
///
/// Exact for `m = 0`. For `m >= 1` it grows linearly in `beta`, while the
/// thermal density tends to `Q_0^{(m)}` as `beta -> inf` whose entropy is
/// finite; [`wehrl_thermal_verify`] reports both.
pub fn wehrl_thermal_paper(m: u32, th: &ThermalParams) -> f64 {
    let b = th.beta();
    let e = (-b).exp();
    1.0 - (-e).ln_1p() + m as f64 * (b + e - e * e)
}

/// `d/d beta` of [`wehrl_thermal_paper`].
pub fn wehrl_thermal_paper_derivative(m: u32, beta: f64) -> f64 {
    let e = (-beta).exp();
    -e / (1.0 - e) + m as f64 * (1.0 - e + 2.0 * e * e)
}

/// Quadrature entropy of the thermal density next to the closed form.
pub fn wehrl_thermal_verify(
    m: u32,
    th: &ThermalParams,
    spec: &QuadratureSpec,
) -> Result<EntropyReport> {
    let subject = DensityKind::Thermal { m, beta: th.beta() };
    let numeric_value = wehrl_numeric(&make_density(subject)?, spec)?;
    let paper_value = wehrl_thermal_paper(m, th);
    Ok(EntropyReport {
        subject,
        numeric_value,
        paper_value: Some(paper_value),
        formula_id: "prop4.2.closed-form".into(),
        abs_diff: Some((numeric_value - paper_value).abs()),
    })
}

/// Quadrature entropy of a pure-state density next to the closed form when
/// one exists (`min(m, j) = 0`).
pub fn wehrl_pure_report(m: u32, j: u32, spec: &QuadratureSpec) -> Result<EntropyReport> {
    let subject = DensityKind::Pure { m, j };
    let numeric_value = wehrl_numeric(&make_density(subject)?, spec)?;
    let (paper_value, formula_id) = if m.min(j) == 0 {
        (Some(wehrl_pure_m0(m.max(j))), "remark4.1")
    } else {
        (
            wehrl_pure_asymptotic(m, j).ok().map(|v| v.0),
            "prop4.1.leading-term",
        )
    };
    Ok(EntropyReport {
        subject,
        numeric_value,
        paper_value,
        formula_id: formula_id.into(),
        abs_diff: paper_value.map(|p| (numeric_value - p).abs()),
    })
}
