use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::phase_space::{husimi_pure, husimi_thermal};
use crate::phase_space::{DensityKind, RadialDensity, ThermalParams};
use crate::quadrature::{gauss_laguerre_rule, integrate_halfline, QuadratureSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MomentSource {
    ClosedFormPaper,
    CfCumulant,
    Quadrature,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MomentSummary {
    pub mean: f64,
    pub variance: f64,
    pub source: MomentSource,
}

/// Mean `m + j + 1`, variance `2mj + m + j + 1`.
pub fn moments_pure(m: u32, j: u32) -> MomentSummary {
    let (m, j) = (m as f64, j as f64);
    MomentSummary {
        mean: m + j + 1.0,
        variance: 2.0 * m * j + m + j + 1.0,
        source: MomentSource::ClosedFormPaper,
    }
}

/// Mean `m + 1/eta`; variance from the second cumulant of the thermal
/// characteristic function, `(m + 1 - m e^{-2 beta}) / eta^2`.
pub fn moments_thermal(m: u32, th: &ThermalParams) -> MomentSummary {
    let eta = th.eta();
    let mf = m as f64;
    MomentSummary {
        mean: mf + 1.0 / eta,
        variance: (mf + 1.0 - mf * (-2.0 * th.beta()).exp()) / (eta * eta),
        source: MomentSource::CfCumulant,
    }
}

/// The variance as originally stated for the thermal density,
/// `(m + 1 - e^{-2 beta}) / eta^2`. It coincides with the cumulant value only
/// at `m = 1`.
pub fn paper_stated_variance(m: u32, th: &ThermalParams) -> f64 {
    let eta = th.eta();
    (m as f64 + 1.0 - (-2.0 * th.beta()).exp()) / (eta * eta)
}

/// Mean and variance by adaptive quadrature of `lambda q` and `lambda^2 q`.
pub fn moments_quadrature(density: &RadialDensity, spec: &QuadratureSpec) -> Result<MomentSummary> {
    let spec = spec.clone().with_splits(density.zero_set());
    let rate = density.decay_rate();
    let m1 = integrate_halfline(|t| t * density.eval(t), rate, &spec)?.value;
    let m2 = integrate_halfline(|t| t * t * density.eval(t), rate, &spec)?.value;
    Ok(MomentSummary {
        mean: m1,
        variance: (m2 - m1 * m1).max(0.0),
        source: MomentSource::Quadrature,
    })
}

/// Raw moments `int lambda^k q` for `k = 0, 1, 2` by Gauss-Laguerre. Both
/// densities are `e^{-c lambda}` times a polynomial, so a rule with enough
/// nodes is exact up to rounding.
pub fn raw_moments_gauss_laguerre(kind: DensityKind) -> Result<[f64; 3]> {
    let (rate, degree, eval): (f64, u32, Box<dyn Fn(f64) -> f64>) = match kind {
        DensityKind::Pure { m, j } => (1.0, m + j, Box::new(move |t| husimi_pure(m, j, t))),
        DensityKind::Thermal { m, beta } => {
            let th = ThermalParams::new(beta)?;
            (th.eta(), m, Box::new(move |t| husimi_thermal(m, &th, t)))
        }
    };
    let rule = gauss_laguerre_rule(degree / 2 + 4)?;
    let mut out = [0.0; 3];
    for (k, slot) in out.iter_mut().enumerate() {
        // substitute lambda = t / rate, strip the weight e^{-t}
        *slot = rule.apply(|t| {
            let lambda = t / rate;
            lambda.powi(k as i32) * eval(lambda) * t.exp() / rate
        });
    }
    Ok(out)
}
