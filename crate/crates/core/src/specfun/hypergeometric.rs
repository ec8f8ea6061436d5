use crate::error::{Error, Result};

/// Terminating `2F1(-m, -j; c; z)`, summed for `k = 0..=min(m, j)`.
///
/// The series is truncated where the numerator Pochhammer symbols vanish,
/// which is also what makes a negative-integer `c = -m - j` meaningful: the
/// denominator `(c)_k` never reaches zero before the sum stops.
///
/// Near `z = 1` the plain series cancels badly (at `z = 1` it sums to
/// `m! j! / (m+j)!` from terms of size one), so the Pfaff-transformed sum in
/// powers of `1 - z` is used whenever its terms are smaller in magnitude.
pub fn hyp2f1_terminating(m: u32, j: u32, c: f64, z: f64) -> Result<f64> {
    let (n, other) = (m.min(j), m.max(j));
    let direct = series(n, -(other as f64), c, z, 1.0)?;
    let pfaff = series(n, c + other as f64, c, z, 1.0 - z)?;
    Ok(if pfaff.1 < direct.1 {
        pfaff.0
    } else {
        direct.0
    })
}

// Sum of (-n)_k (b)_k / ((c)_k k!) x^k y^(n-k) for k = 0..=n, where the
// direct form uses (x, y) = (z, 1) and the Pfaff form (b -> c - b) uses
// (x, y) = (-z, 1 - z). Returns (value, sum of |terms|).
fn series(n: u32, b: f64, c: f64, z: f64, one_minus: f64) -> Result<(f64, f64)> {
    let pfaff = one_minus != 1.0;
    let (x, y) = if pfaff { (-z, one_minus) } else { (z, 1.0) };
    let mut coeff = 1.0;
    let mut sum = 0.0;
    let mut abs_sum = 0.0;
    for k in 0..=n {
        if k > 0 {
            let kf = (k - 1) as f64;
            let denom = c + kf;
            if denom == 0.0 {
                return Err(Error::ZeroPochhammer { c, k: k as usize });
            }
            coeff *= (kf - n as f64) * (b + kf) / (denom * (kf + 1.0));
        }
        let term = coeff * x.powi(k as i32) * y.powi((n - k) as i32);
        sum += term;
        abs_sum += term.abs();
    }
    Ok((sum, abs_sum))
}
