use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Magnetic field strength `B > 0` and Landau index `m`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LevelParams {
    b_field: f64,
    m: u32,
}

impl LevelParams {
    pub fn new(b_field: f64, m: u32) -> Result<Self> {
        if !(b_field > 0.0 && b_field.is_finite()) {
            return Err(Error::domain(
                "LevelParams",
                format!("B = {b_field} must be > 0"),
            ));
        }
        Ok(LevelParams { b_field, m })
    }

    pub fn b_field(&self) -> f64 {
        self.b_field
    }

    pub fn m(&self) -> u32 {
        self.m
    }
}

/// Landau level energy `(m + 1/2) B`.
pub fn landau_energy(p: &LevelParams) -> f64 {
    (p.m as f64 + 0.5) * p.b_field
}

/// Inverse temperature of a thermal oscillator state (`k = 1`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThermalParams {
    beta: f64,
}

impl ThermalParams {
    pub fn new(beta: f64) -> Result<Self> {
        if !(beta > 0.0 && beta.is_finite()) {
            return Err(Error::domain(
                "ThermalParams",
                format!("beta = {beta} must be > 0"),
            ));
        }
        Ok(ThermalParams { beta })
    }

    pub fn from_temperature(t: f64) -> Result<Self> {
        if !(t > 0.0 && t.is_finite()) {
            return Err(Error::domain(
                "ThermalParams",
                format!("T = {t} must be > 0"),
            ));
        }
        Self::new(1.0 / t)
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn temperature(&self) -> f64 {
        1.0 / self.beta
    }

    /// `eta = 1 - e^{-beta}`.
    pub fn eta(&self) -> f64 {
        -(-self.beta).exp_m1()
    }

    /// Mean thermal photon number `N_T = 1 / (e^{beta} - 1)`.
    pub fn mean_photons(&self) -> f64 {
        1.0 / self.beta.exp_m1()
    }

    /// Oscillator partition function `1 / (2 sinh(beta/2))`.
    pub fn partition_function(&self) -> f64 {
        0.5 / (0.5 * self.beta).sinh()
    }
}
