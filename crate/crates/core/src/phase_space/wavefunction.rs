//! Position-space wavefunctions of the coherent states and the direct overlap
//! computation that serves as an oracle for [`husimi_pure`](super::husimi_pure).

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quadrature::{integrate_interval, QuadratureSpec};
use crate::specfun::hermite_function;

/// `<xi | (x,y), B, m>`
/// `= (sqrt(pi) 2^m m!)^{-1/2} exp(-i sqrt(B) xi y + i B x y / 2 - (xi - sqrt(B) x)^2 / 2) H_m(xi - sqrt(B) x)`.
pub fn coherent_wavefunction(m: u32, b_field: f64, x: f64, y: f64, xi: f64) -> Complex64 {
    let sb = b_field.sqrt();
    let phase = -sb * xi * y + 0.5 * b_field * x * y;
    Complex64::from_polar(1.0, phase) * hermite_function(m, xi - sb * x)
}

/// `|<(x,y),B,m | phi_j>|^2` by quadrature over the real line, with
/// `phi_j` the `j`-th Hermite function.
pub fn overlap_oracle(m: u32, j: u32, b_field: f64, x: f64, y: f64, tol: f64) -> Result<f64> {
    if !(b_field > 0.0) {
        return Err(Error::domain(
            "overlap_oracle",
            format!("B = {b_field} must be > 0"),
        ));
    }
    if !(tol > 0.0) {
        return Err(Error::domain("overlap_oracle", "tolerance must be > 0"));
    }
    let sb = b_field.sqrt();
    let half_width = sb * x.abs().max(1.0) + (2.0 * (j + m) as f64 + 40.0).sqrt();
    let spec = QuadratureSpec {
        // amplitudes are O(1); below ~1e-13 the panel sums are roundoff
        abs_tol: (tol * 1e-3).clamp(1e-13, 1e-12),
        rel_tol: 1e-12,
        max_subdivisions: 4000,
        split_points: Vec::new(),
    };
    // <psi | phi_j> = int conj(psi) phi_j; the modulus does not care which
    // factor is conjugated
    let integrand = |xi: f64| coherent_wavefunction(m, b_field, x, y, xi) * hermite_function(j, xi);
    let re = integrate_interval(|xi| integrand(xi).re, -half_width, half_width, &spec)?;
    let im = integrate_interval(|xi| integrand(xi).im, -half_width, half_width, &spec)?;
    Ok(re.value * re.value + im.value * im.value)
}
