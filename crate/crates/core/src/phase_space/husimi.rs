//! Husimi densities of Fock projectors and of the thermal oscillator state in
//! the Landau-level coherent states, written in the radial variable
//! `lambda = B (x^2 + y^2) / 2`.

use crate::error::{Error, Result};
use crate::phase_space::params::ThermalParams;
use crate::quadrature::{series_sum, SeriesResult};
use crate::specfun::{
    laguerre_pair_scaled, laguerre_zeros, ln_binomial, ln_factorial, ln_factorial_ratio,
};

pub fn lambda_of(b_field: f64, x: f64, y: f64) -> Result<f64> {
    if !(b_field > 0.0) {
        return Err(Error::domain(
            "lambda_of",
            format!("B = {b_field} must be > 0"),
        ));
    }
    Ok(0.5 * b_field * (x * x + y * y))
}

/// `Q_j^{(m)}(lambda) = (m^j)!/(m v j)! e^{-lambda} lambda^{|m-j|} (L_{m^j}^{(|m-j|)}(lambda))^2`.
///
/// The factorial ratio, the power and the polynomial are combined in log
/// form, so large `|m - j|` does not underflow the prefactor on its own.
pub fn husimi_pure(m: u32, j: u32, lambda: f64) -> f64 {
    let (lo, hi) = (m.min(j), m.max(j));
    let alpha = hi - lo;
    if lambda == 0.0 {
        return if alpha == 0 { 1.0 } else { 0.0 };
    }
    let (lag, _) = laguerre_pair_scaled(lo, alpha as f64, lambda);
    if lag.mantissa == 0.0 {
        return 0.0;
    }
    let ln_q =
        ln_factorial_ratio(lo, hi) - lambda + alpha as f64 * lambda.ln() + 2.0 * lag.ln_abs();
    ln_q.exp()
}

/// Thermal Husimi density
/// `eta e^{-eta lambda} e^{-m beta} L_m^{(0)}(-lambda eta^2 e^{beta})`.
///
/// The Laguerre factor is expanded as
/// `sum_k C(m,k) (lambda eta^2)^k e^{-(m-k) beta} / k!`; every term is
/// positive and bounded, and `e^{beta}` is never formed on its own.
pub fn husimi_thermal(m: u32, th: &ThermalParams, lambda: f64) -> f64 {
    let eta = th.eta();
    let beta = th.beta();
    let ln_x = (lambda * eta * eta).ln();
    let ln_terms: Vec<f64> = (0..=m)
        .map(|k| {
            let power = if k == 0 { 0.0 } else { k as f64 * ln_x };
            ln_binomial(m, k) + power - (m - k) as f64 * beta - ln_factorial(k)
        })
        .collect();
    let peak = ln_terms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let sum: f64 = ln_terms.iter().map(|t| (t - peak).exp()).sum();
    eta * (-eta * lambda + peak + sum.ln()).exp()
}

/// The thermal density summed directly from its definition,
/// `(1/Z) sum_j e^{-beta (j + 1/2)} Q_j^{(m)}(lambda)`, until the remaining
/// weight `e^{-beta (J+1)}` (each `Q_j <= 1`) drops below `tol`.
pub fn husimi_thermal_series(
    m: u32,
    th: &ThermalParams,
    lambda: f64,
    tol: f64,
) -> Result<SeriesResult> {
    let eta = th.eta();
    let beta = th.beta();
    series_sum(
        |j| eta * (-beta * j as f64).exp() * husimi_pure(m, j as u32, lambda),
        |j| (-beta * (j + 1) as f64).exp(),
        tol,
        1_000_000,
    )
}

/// Radii `R_i = sqrt(2 x_i / B)` of the circles on which `Q_j^{(m)}` vanishes,
/// `x_i` the zeros of `L_{m^j}^{(|m-j|)}`. Empty when `min(m, j) = 0`.
pub fn husimi_zero_radii(m: u32, j: u32, b_field: f64) -> Result<Vec<f64>> {
    if !(b_field > 0.0) {
        return Err(Error::domain(
            "husimi_zero_radii",
            format!("B = {b_field} must be > 0"),
        ));
    }
    let lo = m.min(j);
    if lo == 0 {
        return Ok(Vec::new());
    }
    Ok(laguerre_zeros(lo, (m.max(j) - lo) as f64)?
        .into_iter()
        .map(|x| (2.0 * x / b_field).sqrt())
        .collect())
}

/// Zeros in the radial variable, i.e. the Laguerre zeros themselves.
pub fn husimi_zero_lambdas(m: u32, j: u32) -> Result<Vec<f64>> {
    let lo = m.min(j);
    if lo == 0 {
        return Ok(Vec::new());
    }
    laguerre_zeros(lo, (m.max(j) - lo) as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::factorial;

    #[test]
    fn radial_variable() {
        assert_eq!(lambda_of(1.0, 0.0, 0.0).unwrap(), 0.0);
        assert_eq!(lambda_of(2.0, 1.0, 1.0).unwrap(), 2.0);
        assert!(lambda_of(0.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn pure_closed_cases() {
        for j in 0..8u32 {
            for lambda in [0.3_f64, 1.0, 4.5] {
                let gamma = (-lambda).exp() * lambda.powi(j as i32) / factorial(j).unwrap();
                assert!(
                    (husimi_pure(0, j, lambda) - gamma).abs() <= 1e-15 * gamma.max(1e-300) * 10.0
                );
            }
        }
        assert_eq!(husimi_pure(1, 1, 1.0), 0.0);
        let v = husimi_pure(1, 0, 2.0);
        assert!((v - 2.0 * (-2.0_f64).exp()).abs() < 1e-15);
        assert!((v - 0.270_670_6).abs() < 1e-7);
        assert_eq!(husimi_pure(0, 0, 0.0), 1.0);
        assert_eq!(husimi_pure(2, 5, 0.0), 0.0);
    }

    #[test]
    fn symmetric_in_indices() {
        for m in 0..10 {
            for j in 0..10 {
                for lambda in [0.01, 0.7, 3.3, 17.0] {
                    assert_eq!(husimi_pure(m, j, lambda), husimi_pure(j, m, lambda));
                }
            }
        }
    }

    #[test]
    fn thermal_closed_cases() {
        for beta in [0.25, 1.0, 4.0] {
            let th = ThermalParams::new(beta).unwrap();
            let eta = th.eta();
            for lambda in [0.0, 0.5, 3.0] {
                let exp_law = eta * (-eta * lambda).exp();
                assert!((husimi_thermal(0, &th, lambda) - exp_law).abs() < 1e-15);
            }
            for m in 0..6 {
                let at_zero = eta * (-(m as f64) * beta).exp();
                assert!(
                    (husimi_thermal(m, &th, 0.0) - at_zero).abs()
                        <= 1e-15 * at_zero.max(1e-300) * 4.0
                );
            }
        }
    }

    #[test]
    fn thermal_matches_sinh_form() {
        // the sinh form of the argument, -4 lambda sinh^2(beta/2)
        use crate::specfun::laguerre;
        for (m, beta, lambda) in [(2u32, 1.0, 1.0), (5, 0.5, 2.5), (3, 3.0, 0.2)] {
            let th = ThermalParams::new(beta).unwrap();
            let eta = th.eta();
            let s = (0.5 * beta).sinh();
            let direct = eta
                * (-eta * lambda).exp()
                * (-(m as f64) * beta).exp()
                * laguerre(m, 0.0, -4.0 * lambda * s * s);
            let v = husimi_thermal(m, &th, lambda);
            assert!((v - direct).abs() <= 1e-13 * direct, "{m} {beta} {lambda}");
        }
    }

    #[test]
    fn thermal_matches_series_at_reference_point() {
        let th = ThermalParams::new(1.0).unwrap();
        let closed = husimi_thermal(2, &th, 1.0);
        let series = husimi_thermal_series(2, &th, 1.0, 1e-15).unwrap();
        assert!((closed - series.value).abs() <= 1e-10);
    }

    #[test]
    fn zero_radii() {
        assert!(husimi_zero_radii(1, 0, 1.0).unwrap().is_empty());
        let r = husimi_zero_radii(1, 2, 2.0).unwrap();
        assert_eq!(r.len(), 1);
        assert!((r[0] - std::f64::consts::SQRT_2).abs() < 1e-14);
        let r = husimi_zero_radii(3, 5, 1.0).unwrap();
        assert_eq!(r.len(), 3);
        for radius in r {
            let lambda = 0.5 * radius * radius;
            assert!(husimi_pure(3, 5, lambda) <= 1e-18);
        }
    }
}
