//! Log-gamma and digamma on the positive real axis.
//!
//! Both shift the argument upward with the recurrence until the Stirling /
//! asymptotic series converges to machine precision, then sum the series.

use crate::error::{Error, Result};
use crate::specfun::combinatorics::ln_factorial;

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

// B_{2k} / (2k (2k-1)) for k = 1..7
const STIRLING: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
];

// B_{2k} / (2k) for k = 1..6
const DIGAMMA_ASYMPTOTIC: [f64; 6] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32_760.0,
];

pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain("log_gamma", format!("x = {x} must be > 0")));
    }
    if x.fract() == 0.0 && x <= 33.0 {
        return Ok(ln_factorial(x as u32 - 1));
    }
    Ok(log_gamma_stirling(x))
}

pub(crate) fn log_gamma_stirling(x: f64) -> f64 {
    let mut shift = 0.0;
    let mut z = x;
    let mut prod = 1.0;
    while z < 12.0 {
        prod *= z;
        z += 1.0;
        if prod > 1e280 {
            shift += prod.ln();
            prod = 1.0;
        }
    }
    shift += prod.ln();
    let inv = 1.0 / z;
    let inv2 = inv * inv;
    let mut series = 0.0;
    let mut p = inv;
    for c in STIRLING {
        series += c * p;
        p *= inv2;
    }
    (z - 0.5) * z.ln() - z + LN_SQRT_2PI + series - shift
}

pub fn digamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain("digamma", format!("x = {x} must be > 0")));
    }
    let mut acc = 0.0;
    let mut z = x;
    while z < 8.0 {
        acc -= 1.0 / z;
        z += 1.0;
    }
    let inv2 = 1.0 / (z * z);
    let mut series = 0.0;
    let mut p = inv2;
    for c in DIGAMMA_ASYMPTOTIC {
        series += c * p;
        p *= inv2;
    }
    Ok(acc + z.ln() - 0.5 / z - series)
}

/// `psi(j + 1) = -gamma + H_j`, summed exactly from the harmonic numbers.
pub fn digamma_int_plus_one(j: u32) -> f64 {
    -EULER_GAMMA + (1..=j).rev().map(|k| 1.0 / k as f64).sum::<f64>()
}
