//! Photon-count distributions dual to the Husimi densities, and seeded
//! inverse-CDF sampling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::phase_space::{husimi_pure, ThermalParams};
use crate::specfun::{ln_binomial, ln_factorial};

pub const CDF_CUTOFF: f64 = 1.0 - 1e-12;
const MAX_TABLE: usize = 1_000_000;

/// `Pr(X = j) = Q_j^{(m)}(lambda)`.
pub fn pmf_x(m: u32, lambda: f64, j: u32) -> f64 {
    husimi_pure(m, j, lambda)
}

/// Laguerre photon-count law
/// `N^m / (1+N)^{m+1} e^{-lambda/(1+N)} L_m^{(0)}(-lambda / (N (1+N)))`
/// with `N = N_T` the mean thermal photon number, evaluated as a log-sum of
/// the positive terms of the Laguerre expansion.
pub fn pmf_y(m: u32, lambda: f64, th: &ThermalParams) -> f64 {
    let n = th.mean_photons();
    let ln_n = n.ln();
    let ln_1n = n.ln_1p();
    let base = m as f64 * ln_n - (m as f64 + 1.0) * ln_1n - lambda / (1.0 + n);
    if lambda == 0.0 {
        return base.exp();
    }
    let ln_x = lambda.ln() - ln_n - ln_1n;
    let terms: Vec<f64> = (0..=m)
        .map(|k| ln_binomial(m, k) + k as f64 * ln_x - ln_factorial(k))
        .collect();
    let peak = terms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let sum: f64 = terms.iter().map(|t| (t - peak).exp()).sum();
    (base + peak + sum.ln()).exp()
}

/// Masses `p(0), p(1), ...` up to the first index at or beyond `floor_index`
/// where the CDF has reached `1 - 1e-12` and the masses are decreasing.
pub fn pmf_table<F: Fn(usize) -> f64>(pmf: F, floor_index: usize) -> Result<Vec<f64>> {
    let mut table = Vec::new();
    let mut cdf = 0.0;
    for j in 0..MAX_TABLE {
        let p = pmf(j);
        if !(p >= 0.0) {
            return Err(Error::domain(
                "pmf_table",
                format!("mass {p} at {j} is not a probability"),
            ));
        }
        cdf += p;
        table.push(p);
        let decreasing = j == 0 || p <= table[j - 1];
        if j >= floor_index && decreasing && cdf >= CDF_CUTOFF {
            return Ok(table);
        }
    }
    Err(Error::NumericalFailure {
        func: "pmf_table",
        index: MAX_TABLE,
        detail: "CDF did not reach the cutoff".into(),
        best_estimate: Some(cdf),
    })
}

/// `n` draws from `pmf` by inverse-CDF lookup, deterministic for a given
/// `seed`. The table is cut where the CDF first reaches `1 - 1e-12`; draws
/// are scaled to the tabulated mass.
pub fn sample_pmf<F: Fn(usize) -> f64>(pmf: F, n: usize, seed: u64) -> Result<Vec<usize>> {
    let mut cdf = Vec::new();
    let mut acc = 0.0;
    let mut j = 0;
    while acc < CDF_CUTOFF {
        if j >= MAX_TABLE {
            return Err(Error::NumericalFailure {
                func: "sample_pmf",
                index: j,
                detail: "CDF did not reach the cutoff".into(),
                best_estimate: Some(acc),
            });
        }
        acc += pmf(j);
        cdf.push(acc);
        j += 1;
    }
    let total = acc;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..n)
        .map(|_| {
            let u: f64 = rng.gen::<f64>() * total;
            cdf.partition_point(|&c| c <= u).min(cdf.len() - 1)
        })
        .collect())
}
