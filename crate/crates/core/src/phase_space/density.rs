use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::phase_space::husimi::{husimi_pure, husimi_thermal, husimi_zero_lambdas};
use crate::phase_space::params::ThermalParams;
use crate::quadrature::{integrate_halfline, IntegralResult, QuadratureSpec};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DensityKind {
    Pure { m: u32, j: u32 },
    Thermal { m: u32, beta: f64 },
}

impl std::fmt::Display for DensityKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DensityKind::Pure { m, j } => write!(f, "pure(m={m}, j={j})"),
            DensityKind::Thermal { m, beta } => write!(f, "thermal(m={m}, beta={beta})"),
        }
    }
}

/// A Husimi density on `lambda in [0, inf)` with its zero set and the
/// exponential decay rate of its tail.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialDensity {
    kind: DensityKind,
    thermal: Option<ThermalParams>,
    zero_set: Vec<f64>,
    decay_rate: f64,
}

const NORMALIZATION_TOL: f64 = 1e-8;

impl RadialDensity {
    pub fn kind(&self) -> DensityKind {
        self.kind
    }

    pub fn zero_set(&self) -> &[f64] {
        &self.zero_set
    }

    pub fn decay_rate(&self) -> f64 {
        self.decay_rate
    }

    pub fn eval(&self, lambda: f64) -> f64 {
        match (self.kind, &self.thermal) {
            (DensityKind::Pure { m, j }, _) => husimi_pure(m, j, lambda),
            (DensityKind::Thermal { m, .. }, Some(th)) => husimi_thermal(m, th, lambda),
            (DensityKind::Thermal { .. }, None) => unreachable!("thermal density without params"),
        }
    }

    /// `int_0^inf density`.
    pub fn normalization(&self, spec: &QuadratureSpec) -> Result<IntegralResult> {
        let spec = spec.clone().with_splits(&self.zero_set);
        integrate_halfline(|t| self.eval(t), self.decay_rate, &spec)
    }
}

/// Builds the density, its zero set, and checks that it integrates to one.
pub fn make_density(kind: DensityKind) -> Result<RadialDensity> {
    let density = match kind {
        DensityKind::Pure { m, j } => RadialDensity {
            kind,
            thermal: None,
            zero_set: husimi_zero_lambdas(m, j)?,
            decay_rate: 1.0,
        },
        DensityKind::Thermal { beta, .. } => {
            let th = ThermalParams::new(beta)?;
            RadialDensity {
                kind,
                thermal: Some(th),
                zero_set: Vec::new(),
                decay_rate: th.eta(),
            }
        }
    };
    let norm = density.normalization(&QuadratureSpec::default())?;
    if (norm.value - 1.0).abs() > NORMALIZATION_TOL {
        return Err(Error::failure(
            "make_density",
            0,
            format!("{kind} integrates to {}", norm.value),
        ));
    }
    Ok(density)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction() {
        let d = make_density(DensityKind::Pure { m: 0, j: 0 }).unwrap();
        assert!(d.zero_set().is_empty());
        assert_eq!(d.decay_rate(), 1.0);

        let d = make_density(DensityKind::Pure { m: 2, j: 2 }).unwrap();
        let s2 = std::f64::consts::SQRT_2;
        assert_eq!(d.zero_set().len(), 2);
        assert!((d.zero_set()[0] - (2.0 - s2)).abs() < 1e-14);
        assert!((d.zero_set()[1] - (2.0 + s2)).abs() < 1e-14);

        let d = make_density(DensityKind::Thermal { m: 1, beta: 1.0 }).unwrap();
        let n = d.normalization(&QuadratureSpec::default()).unwrap();
        assert!((n.value - 1.0).abs() < 1e-10);
        assert!((d.decay_rate() - (1.0 - (-1.0_f64).exp())).abs() < 1e-15);
    }

    #[test]
    fn bad_parameters() {
        assert!(make_density(DensityKind::Thermal { m: 1, beta: -1.0 }).is_err());
    }
}
