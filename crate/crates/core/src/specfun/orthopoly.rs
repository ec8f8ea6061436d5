//! Generalized Laguerre and Hermite polynomials, by three-term recurrence.

use crate::error::{Error, Result};
use crate::specfun::tridiagonal::symmetric_tridiagonal_eigenvalues;

const RESCALE_AT: f64 = 1e150;

/// `L_n^{(alpha)}(x)`. Accepts any real `alpha` and `x`, including negative
/// arguments where every term of the explicit sum is positive.
pub fn laguerre(n: u32, alpha: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 1.0 + alpha - x;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + alpha - x) * cur - (kf + alpha) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// A polynomial value represented as `mantissa * exp(log_scale)`, so degrees
/// in the hundreds at large arguments stay finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scaled {
    pub mantissa: f64,
    pub log_scale: f64,
}

impl Scaled {
    pub fn ln_abs(&self) -> f64 {
        self.mantissa.abs().ln() + self.log_scale
    }

    pub fn value(&self) -> f64 {
        self.mantissa * self.log_scale.exp()
    }
}

/// `(L_n^{(alpha)}(x), L_{n-1}^{(alpha)}(x))` sharing one scale factor.
/// For `n == 0` the second entry is zero.
pub fn laguerre_pair_scaled(n: u32, alpha: f64, x: f64) -> (Scaled, Scaled) {
    let mut prev = 0.0;
    let mut cur = 1.0;
    let mut log_scale = 0.0;
    if n > 0 {
        prev = 1.0;
        cur = 1.0 + alpha - x;
    }
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + alpha - x) * cur - (kf + alpha) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
        if cur.abs() > RESCALE_AT {
            cur /= RESCALE_AT;
            prev /= RESCALE_AT;
            log_scale += RESCALE_AT.ln();
        }
    }
    (
        Scaled {
            mantissa: cur,
            log_scale,
        },
        Scaled {
            mantissa: prev,
            log_scale,
        },
    )
}

/// Physicists' Hermite polynomial `H_m(x)`.
pub fn hermite(m: u32, x: f64) -> f64 {
    let mut prev = 1.0;
    if m == 0 {
        return prev;
    }
    let mut cur = 2.0 * x;
    for k in 1..m {
        let next = 2.0 * x * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Normalized Hermite function `(sqrt(pi) 2^m m!)^{-1/2} e^{-x^2/2} H_m(x)`,
/// computed by its own orthonormal recurrence so it neither overflows nor
/// loses the Gaussian factor at large `m`.
pub fn hermite_function(m: u32, x: f64) -> f64 {
    let mut prev = 0.0;
    let mut cur = std::f64::consts::PI.powf(-0.25) * (-0.5 * x * x).exp();
    for k in 0..m {
        let kf = k as f64;
        let next = (2.0 / (kf + 1.0)).sqrt() * x * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// The `n` positive zeros of `L_n^{(alpha)}`, ascending.
///
/// Eigenvalues of the Jacobi matrix give starting points; each is then
/// polished with Newton steps on the scaled recurrence.
pub fn laguerre_zeros(n: u32, alpha: f64) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::domain("laguerre_zeros", "degree must be >= 1"));
    }
    if !(alpha > -1.0) {
        return Err(Error::domain(
            "laguerre_zeros",
            format!("alpha = {alpha} must be > -1"),
        ));
    }
    if n == 1 {
        return Ok(vec![1.0 + alpha]);
    }
    let diag: Vec<f64> = (0..n).map(|k| 2.0 * k as f64 + alpha + 1.0).collect();
    let off: Vec<f64> = (1..n)
        .map(|k| (k as f64 * (k as f64 + alpha)).sqrt())
        .collect();
    let mut zeros = symmetric_tridiagonal_eigenvalues(&diag, &off)?;
    let nf = n as f64;
    for (i, z) in zeros.iter_mut().enumerate() {
        let mut x = *z;
        let mut converged = false;
        for _ in 0..20 {
            let (p, q) = laguerre_pair_scaled(n, alpha, x);
            // x L_n' = n L_n - (n + alpha) L_{n-1}
            let dp = (nf * p.mantissa - (nf + alpha) * q.mantissa) / x;
            if dp == 0.0 {
                break;
            }
            let step = p.mantissa / dp;
            x -= step;
            if step.abs() <= 4.0 * f64::EPSILON * x.abs() {
                converged = true;
                break;
            }
        }
        if !converged && (x - *z).abs() > 1e-6 * z.abs().max(1.0) {
            return Err(Error::failure(
                "laguerre_zeros",
                i,
                "Newton polish diverged",
            ));
        }
        *z = x;
    }
    zeros.sort_by(|a, b| a.total_cmp(b));
    if zeros.windows(2).any(|w| w[0] >= w[1]) || zeros[0] <= 0.0 {
        return Err(Error::failure(
            "laguerre_zeros",
            n as usize,
            "zeros not strictly increasing and positive",
        ));
    }
    Ok(zeros)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQRT2: f64 = std::f64::consts::SQRT_2;

    #[test]
    fn laguerre_low_degree() {
        assert_eq!(laguerre(0, 0.0, 3.7), 1.0);
        for (alpha, x) in [(0.0, 0.3), (2.0, -1.5), (-0.5, 4.0)] {
            assert_eq!(laguerre(1, alpha, x), 1.0 + alpha - x);
        }
        assert!(laguerre(2, 0.0, 2.0 - SQRT2).abs() < 1e-15);
        // L_2(x) = 1 - 2x + x^2 / 2
        for x in [-3.0, 0.0, 0.7, 5.5] {
            assert!((laguerre(2, 0.0, x) - (1.0 - 2.0 * x + 0.5 * x * x)).abs() < 1e-13);
        }
    }

    #[test]
    fn scaled_matches_plain() {
        for (n, alpha, x) in [(5, 0.0, 1.3), (12, 3.0, 7.7), (30, 1.0, -2.0)] {
            let (p, q) = laguerre_pair_scaled(n, alpha, x);
            assert!((p.value() - laguerre(n, alpha, x)).abs() <= 1e-12 * p.value().abs().max(1.0));
            assert!(
                (q.value() - laguerre(n - 1, alpha, x)).abs() <= 1e-12 * q.value().abs().max(1.0)
            );
        }
        let (p, _) = laguerre_pair_scaled(200, 0.0, 750.0);
        assert!(p.ln_abs().is_finite() && p.ln_abs() > 300.0);
    }

    #[test]
    fn hermite_values() {
        assert_eq!(hermite(0, 0.4), 1.0);
        assert_eq!(hermite(1, 0.4), 0.8);
        assert_eq!(hermite(3, 1.0), -4.0);
        for m in 0..12 {
            let x: f64 = 0.83;
            let norm = (std::f64::consts::PI.sqrt()
                * 2f64.powi(m as i32)
                * crate::specfun::factorial(m).unwrap())
            .sqrt();
            let direct = (-0.5 * x * x).exp() * hermite(m, x) / norm;
            assert!((hermite_function(m, x) - direct).abs() < 1e-14, "m={m}");
        }
    }

    #[test]
    fn zeros_small_cases() {
        assert_eq!(laguerre_zeros(1, 2.5).unwrap(), vec![3.5]);
        let z = laguerre_zeros(2, 0.0).unwrap();
        assert!((z[0] - (2.0 - SQRT2)).abs() < 1e-14);
        assert!((z[1] - (2.0 + SQRT2)).abs() < 1e-14);
        assert!(laguerre_zeros(0, 0.0).is_err());
        assert!(laguerre_zeros(3, -1.0).is_err());
    }

    #[test]
    fn zeros_are_roots_and_interlace() {
        for alpha in [0.0, 1.0, 3.0, 0.5] {
            for n in 1..=40u32 {
                let z = laguerre_zeros(n, alpha).unwrap();
                assert_eq!(z.len(), n as usize);
                let sup = (0..=400)
                    .map(|i| laguerre(n, alpha, z[z.len() - 1] * i as f64 / 400.0).abs())
                    .fold(1.0_f64, f64::max);
                for x in &z {
                    assert!(
                        laguerre(n, alpha, *x).abs() <= 1e-12 * sup,
                        "n={n} alpha={alpha}"
                    );
                }
                let next = laguerre_zeros(n + 1, alpha).unwrap();
                for i in 0..z.len() {
                    assert!(next[i] < z[i] && z[i] < next[i + 1]);
                }
            }
        }
    }

    #[test]
    fn large_degree_zeros() {
        let z = laguerre_zeros(200, 0.0).unwrap();
        assert_eq!(z.len(), 200);
        for x in &z {
            let (p, q) = laguerre_pair_scaled(200, 0.0, *x);
            assert!((p.mantissa / q.mantissa).abs() < 1e-9);
        }
    }
}
