use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::phase_space::{make_density, DensityKind, RadialDensity};
use crate::quadrature::{integrate_halfline, QuadratureSpec};
use crate::specfun::{
    binomial, ln_factorial, ln_factorial_ratio, log_gamma, partial_bell, BellArgs,
};

fn check_order(func: &'static str, q: f64) -> Result<()> {
    if !(q.is_finite() && q > 0.0) {
        return Err(Error::domain(
            func,
            format!("order q = {q} must be positive"),
        ));
    }
    if q == 1.0 {
        return Err(Error::domain(func, "order q = 1 is the Wehrl limit"));
    }
    Ok(())
}

/// `(1/(1-q)) ln int d(lambda)^q dlambda`.
pub fn renyi_numeric(d: &RadialDensity, q: f64, spec: &QuadratureSpec) -> Result<f64> {
    check_order("renyi_numeric", q)?;
    let spec = spec.clone().with_splits(d.zero_set());
    let integral = integrate_halfline(|t| d.eval(t).max(0.0).powf(q), q * d.decay_rate(), &spec)?;
    Ok(integral.value.ln() / (1.0 - q))
}

/// Coefficient of `lambda^k` in the polynomial whose square, times
/// `e^{-lambda} lambda^alpha`, gives the pure-state density, as stated:
/// `sqrt((n+k)!/n!) (-1)^k / (alpha+k)! C(n,k)`, zero for `k > n`.
pub fn renyi_coefficient_stated(n: u32, alpha: u32, k: u32) -> f64 {
    if k > n {
        return 0.0;
    }
    let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    let ln_mag = 0.5 * ln_factorial_ratio(n + k, n) - ln_factorial(alpha + k);
    sign * ln_mag.exp() * binomial(n, k).unwrap_or(f64::NAN)
}

/// Same coefficient obtained by expanding `L_n^{(alpha)}` directly:
/// `sqrt((n+alpha)!/n!) (-1)^k / (alpha+k)! C(n,k)`.
pub fn renyi_coefficient_expanded(n: u32, alpha: u32, k: u32) -> f64 {
    if k > n {
        return 0.0;
    }
    let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    let ln_mag = 0.5 * ln_factorial_ratio(n + alpha, n) - ln_factorial(alpha + k);
    sign * ln_mag.exp() * binomial(n, k).unwrap_or(f64::NAN)
}

fn two_q(func: &'static str, q: f64) -> Result<u32> {
    check_order(func, q)?;
    let l = 2.0 * q;
    if l.fract() != 0.0 || l > 1e4 {
        return Err(Error::domain(
            func,
            format!("2q = {l} is not a natural number"),
        ));
    }
    Ok(l as u32)
}

fn bell_series(m: u32, j: u32, q: f64, coeff: fn(u32, u32, u32) -> f64) -> Result<f64> {
    let func = "renyi_bell";
    let l = two_q(func, q)?;
    let (n, alpha) = (m.min(j), m.max(j) - m.min(j));
    let aq = alpha as f64 * q;
    let kmax = n * l;
    // args[i] = (i+1)! c_i
    let args: Vec<f64> = (0..=kmax)
        .map(|i| coeff(n, alpha, i) * ln_factorial(i + 1).exp())
        .collect();

    let mut terms: Vec<(f64, f64)> = Vec::with_capacity(kmax as usize + 1);
    for k in 0..=kmax {
        let bell = partial_bell(&BellArgs::new(
            (k + l) as usize,
            l as usize,
            args[..=k as usize].to_vec(),
        )?);
        if bell == 0.0 {
            continue;
        }
        if !bell.is_finite() {
            return Err(Error::Overflow { func });
        }
        let s = aq + k as f64 + 1.0;
        let ln_mag =
            log_gamma(s)? - s * q.ln() + ln_factorial(l) - ln_factorial(k + l) + bell.abs().ln();
        terms.push((ln_mag, bell.signum()));
    }
    let top = terms.iter().map(|t| t.0).fold(f64::NEG_INFINITY, f64::max);
    let scaled: f64 = terms.iter().map(|(lm, s)| s * (lm - top).exp()).sum();
    if !(scaled > 0.0) {
        return Err(Error::NumericalFailure {
            func,
            index: 0,
            detail: format!("Bell sum is not positive (scaled value {scaled:e})"),
            best_estimate: None,
        });
    }
    Ok((top + scaled.ln()) / (1.0 - q))
}

/// The Bell-polynomial series for the pure-state Renyi entropy, evaluated
/// with the stated coefficients [`renyi_coefficient_stated`].
pub fn renyi_bell(m: u32, j: u32, q: f64) -> Result<f64> {
    bell_series(m, j, q, renyi_coefficient_stated)
}

/// The same series with [`renyi_coefficient_expanded`]. Exact for integer
/// `q`; for half-integer `q` it computes `int e^{-q l} l^{alpha q} L^{2q}`,
/// which differs from the entropy wherever the Laguerre factor is negative.
pub fn renyi_bell_expanded(m: u32, j: u32, q: f64) -> Result<f64> {
    bell_series(m, j, q, renyi_coefficient_expanded)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RenyiComparison {
    pub m: u32,
    pub j: u32,
    pub q: f64,
    pub numeric: f64,
    pub bell: Option<f64>,
    pub bell_error: Option<String>,
    pub abs_diff: Option<f64>,
}

pub fn renyi_compare(m: u32, j: u32, q: f64, spec: &QuadratureSpec) -> Result<RenyiComparison> {
    let numeric = renyi_numeric(&make_density(DensityKind::Pure { m, j })?, q, spec)?;
    let (bell, bell_error) = match renyi_bell(m, j, q) {
        Ok(v) => (Some(v), None),
        Err(e @ Error::Domain { .. }) => return Err(e),
        Err(e) => (None, Some(e.to_string())),
    };
    Ok(RenyiComparison {
        m,
        j,
        q,
        numeric,
        bell,
        bell_error,
        abs_diff: bell.map(|b| (b - numeric).abs()),
    })
}
