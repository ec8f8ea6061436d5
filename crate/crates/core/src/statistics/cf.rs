//! Characteristic functions of the Husimi densities, closed form and by
//! quadrature.

use num_complex::Complex64;

use crate::error::Result;
use crate::phase_space::{RadialDensity, ThermalParams};
use crate::quadrature::{integrate_halfline, QuadratureSpec};
use crate::specfun::{hyp2f1_terminating, ln_factorial};

/// `E e^{iuQ} = ((m+j)!/(m! j!)) (1 - iu)^{-(m+j+1)} 2F1(-m, -j; -m-j; 1 + u^2)`.
pub fn cf_pure(m: u32, j: u32, u: f64) -> Complex64 {
    let binom = (ln_factorial(m + j) - ln_factorial(m) - ln_factorial(j)).exp();
    let f = hyp2f1_terminating(m, j, -((m + j) as f64), 1.0 + u * u)
        .expect("c = -m-j never hits a zero denominator");
    let base = Complex64::new(1.0, -u);
    binom * f * base.powi(-((m + j + 1) as i32))
}

/// `E e^{iuQ} = eta (eta - iu e^{-beta})^m / (eta - iu)^{m+1}`.
pub fn cf_thermal(m: u32, th: &ThermalParams, u: f64) -> Complex64 {
    let eta = th.eta();
    let decay = (-th.beta()).exp();
    let num = Complex64::new(eta, -u * decay);
    let den = Complex64::new(eta, -u);
    eta * (num / den).powi(m as i32) / den
}

/// `ln E e^{uQ}` for real `u < eta`, i.e. the characteristic function
/// continued to `iu -> u`.
pub fn ln_mgf_thermal(m: u32, th: &ThermalParams, u: f64) -> f64 {
    let eta = th.eta();
    let decay = (-th.beta()).exp();
    // the eta prefactor cancels against the eta^m / eta^{m+1} pulled out of the logs
    m as f64 * (-(u * decay) / eta).ln_1p() - (m as f64 + 1.0) * (-u / eta).ln_1p()
}

/// `int_0^inf e^{iu lambda} q(lambda) d lambda` by adaptive quadrature.
pub fn cf_quadrature(density: &RadialDensity, u: f64, spec: &QuadratureSpec) -> Result<Complex64> {
    let spec = spec.clone().with_splits(density.zero_set());
    let rate = density.decay_rate();
    let re = integrate_halfline(|t| (u * t).cos() * density.eval(t), rate, &spec)?;
    let im = integrate_halfline(|t| (u * t).sin() * density.eval(t), rate, &spec)?;
    Ok(Complex64::new(re.value, im.value))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phase_space::{make_density, DensityKind};

    #[test]
    fn pure_special_cases() {
        for u in [-2.0, 0.0, 0.5, 3.0] {
            let v = cf_pure(0, 0, u);
            let e = Complex64::new(1.0, -u).inv();
            assert!((v - e).norm() < 1e-15);
        }
        for m in 0..8 {
            for j in 0..8 {
                assert!((cf_pure(m, j, 0.0) - 1.0).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn pure_against_quadrature() {
        let d = make_density(DensityKind::Pure { m: 1, j: 1 }).unwrap();
        let q = cf_quadrature(&d, 0.7, &QuadratureSpec::default()).unwrap();
        assert!((q - cf_pure(1, 1, 0.7)).norm() <= 1e-10);
    }

    #[test]
    fn thermal_cases() {
        for beta in [0.5, 1.0, 2.0] {
            let th = ThermalParams::new(beta).unwrap();
            for m in 0..5 {
                assert!((cf_thermal(m, &th, 0.0) - 1.0).norm() < 1e-15);
            }
            let eta = th.eta();
            for u in [-1.0, 0.4, 6.0] {
                let e = eta / Complex64::new(eta, -u);
                assert!((cf_thermal(0, &th, u) - e).norm() < 1e-15);
            }
        }
        let th = ThermalParams::new(1.0).unwrap();
        let d = make_density(DensityKind::Thermal { m: 2, beta: 1.0 }).unwrap();
        let q = cf_quadrature(&d, 0.5, &QuadratureSpec::default()).unwrap();
        assert!((q - cf_thermal(2, &th, 0.5)).norm() <= 1e-8);
    }

    #[test]
    fn log_mgf_matches_cf_continuation() {
        let th = ThermalParams::new(1.0).unwrap();
        let eta = th.eta();
        let decay = (-1.0_f64).exp();
        let u = 0.3;
        let direct = (eta * (eta - u * decay).powi(4) / (eta - u).powi(5)).ln();
        assert!((ln_mgf_thermal(4, &th, u) - direct).abs() < 1e-14);
    }
}
