//! One-dimensional maximization and bracketed root finding.

use crate::error::{Error, Result};

const INV_PHI: f64 = 0.618_033_988_749_894_9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extremum {
    pub argument: f64,
    pub value: f64,
    pub iterations: usize,
}

/// Golden-section search for the maximum of a unimodal `f` on `[lo, hi]`,
/// stopping once the bracket is narrower than `x_tol`.
///
/// Near the optimum `f` is flat to second order, so the argument can only be
/// resolved to about `sqrt(eps)` relative unless `f` is evaluated as a
/// difference from a nearby reference value. Callers that need the argument
/// to better than `1e-8` should pass such a shifted objective.
pub fn golden_section_max<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, x_tol: f64) -> Extremum {
    let (mut a, mut b) = (lo.min(hi), lo.max(hi));
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    let mut iterations = 0;
    while (b - a) > x_tol && iterations < 400 {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
        iterations += 1;
        if c >= d {
            break;
        }
    }
    let (argument, value) = if fc >= fd { (c, fc) } else { (d, fd) };
    Extremum {
        argument,
        value,
        iterations,
    }
}

pub fn golden_section_min<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, x_tol: f64) -> Extremum {
    let r = golden_section_max(|x| -f(x), lo, hi, x_tol);
    Extremum {
        value: -r.value,
        ..r
    }
}

/// Root of `f` in `[lo, hi]` (which must bracket a sign change) by Newton steps
/// that fall back to bisection whenever a step leaves the current bracket.
/// `fdf` returns `(f(x), f'(x))`.
pub fn newton_bracketed<F: Fn(f64) -> (f64, f64)>(
    fdf: F,
    lo: f64,
    hi: f64,
    x_tol: f64,
) -> Result<f64> {
    let (mut a, mut b) = (lo, hi);
    let (fa, _) = fdf(a);
    let (fb, _) = fdf(b);
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::domain(
            "newton_bracketed",
            format!("no sign change on [{lo}, {hi}]"),
        ));
    }
    let a_negative = fa < 0.0;
    let mut x = 0.5 * (a + b);
    for _ in 0..200 {
        let (fx, dfx) = fdf(x);
        if fx == 0.0 {
            return Ok(x);
        }
        if (fx < 0.0) == a_negative {
            a = x;
        } else {
            b = x;
        }
        let newton = x - fx / dfx;
        let next = if dfx != 0.0 && newton > a.min(b) && newton < a.max(b) {
            newton
        } else {
            0.5 * (a + b)
        };
        if (next - x).abs() <= x_tol || (b - a).abs() <= x_tol {
            return Ok(next);
        }
        x = next;
    }
    Err(Error::failure("newton_bracketed", 200, "no convergence"))
}
