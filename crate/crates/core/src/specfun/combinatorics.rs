//! Factorials, binomials and Pochhammer symbols.
//!
//! Integer inputs are exact while the result fits in an `f64` mantissa; the
//! `ln_*` variants stay finite far beyond the point where the plain value
//! overflows.

use crate::error::{Error, Result};
use crate::specfun::gamma::log_gamma_stirling;

/// Largest `n` with `n!` representable as a finite `f64`.
pub const MAX_FACTORIAL: u32 = 170;

/// `n!`, exact up to `22!` and correctly rounded products beyond that.
pub fn factorial(n: u32) -> Result<f64> {
    if n > MAX_FACTORIAL {
        return Err(Error::Overflow { func: "factorial" });
    }
    Ok((2..=n).fold(1.0, |acc, k| acc * k as f64))
}

/// `ln(n!)`.
pub fn ln_factorial(n: u32) -> f64 {
    if n < 2 {
        return 0.0;
    }
    if n <= 32 {
        return (2..=n).map(|k| (k as f64).ln()).sum();
    }
    log_gamma_stirling(n as f64 + 1.0)
}

/// `ln(a! / b!)` without forming either factorial.
pub fn ln_factorial_ratio(a: u32, b: u32) -> f64 {
    if a == b {
        return 0.0;
    }
    let (lo, hi, sign) = if a < b { (a, b, -1.0) } else { (b, a, 1.0) };
    if hi - lo <= 64 {
        sign * ((lo + 1)..=hi).map(|k| (k as f64).ln()).sum::<f64>()
    } else {
        sign * (ln_factorial(hi) - ln_factorial(lo))
    }
}

/// `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u32, k: u32) -> Result<f64> {
    if k > n {
        return Ok(0.0);
    }
    let k = k.min(n - k);
    let mut acc = 1.0_f64;
    for i in 0..k {
        // acc * (n - i) / (i + 1) stays an integer at every step
        acc = acc * (n - i) as f64 / (i + 1) as f64;
        if !acc.is_finite() {
            return Err(Error::Overflow { func: "binomial" });
        }
    }
    Ok(acc.round())
}

/// `ln C(n, k)`; `-inf` when `k > n`.
pub fn ln_binomial(n: u32, k: u32) -> f64 {
    if k > n {
        return f64::NEG_INFINITY;
    }
    ln_factorial(n) - ln_factorial(k) - ln_factorial(n - k)
}

/// Rising factorial `(x)_n = x (x+1) ... (x+n-1)` for real `x`.
pub fn pochhammer(x: f64, n: u32) -> Result<f64> {
    let mut acc = 1.0;
    for i in 0..n {
        acc *= x + i as f64;
        if !acc.is_finite() {
            return Err(Error::Overflow { func: "pochhammer" });
        }
    }
    Ok(acc)
}
