//! Globally adaptive panel integration on finite intervals and on `[0, inf)`.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::quadrature::kronrod::{gk15, Panel, EVALS_PER_PANEL};

#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
    /// Known zeros or kinks of the integrand; panels never straddle them.
    pub split_points: Vec<f64>,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            abs_tol: 1e-13,
            rel_tol: 1e-12,
            max_subdivisions: 4000,
            split_points: Vec::new(),
        }
    }
}

impl QuadratureSpec {
    pub fn with_tolerances(abs_tol: f64, rel_tol: f64) -> Self {
        QuadratureSpec {
            abs_tol,
            rel_tol,
            ..Default::default()
        }
    }

    pub fn with_splits(mut self, splits: &[f64]) -> Self {
        self.split_points = splits.to_vec();
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.rel_tol > 0.0) {
            return Err(Error::domain(
                "QuadratureSpec",
                "tolerances must be positive",
            ));
        }
        if self.max_subdivisions == 0 {
            return Err(Error::domain(
                "QuadratureSpec",
                "max_subdivisions must be >= 1",
            ));
        }
        if self.split_points.windows(2).any(|w| w[0] >= w[1])
            || self.split_points.iter().any(|s| !(*s >= 0.0))
        {
            return Err(Error::domain(
                "QuadratureSpec",
                "split_points must be nonnegative and strictly increasing",
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegralResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
}

struct ByError(Panel);

impl PartialEq for ByError {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for ByError {}
impl PartialOrd for ByError {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for ByError {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .error
            .total_cmp(&other.0.error)
            .then_with(|| other.0.a.total_cmp(&self.0.a))
    }
}

/// Adaptive integration of `f` over `[a, b]`, honoring the split points of `spec`
/// that fall strictly inside the interval. `extra_error` is added to the
/// stopping test (used for an analytic tail bound).
fn adaptive<F: Fn(f64) -> f64>(
    f: &F,
    breaks: &[f64],
    spec: &QuadratureSpec,
    extra_error: f64,
) -> Result<IntegralResult> {
    let mut heap: BinaryHeap<ByError> = breaks
        .windows(2)
        .filter(|w| w[1] > w[0])
        .map(|w| ByError(gk15(f, w[0], w[1])))
        .collect();
    let mut evaluations = heap.len() * EVALS_PER_PANEL;
    let mut subdivisions = 0;
    let mut finished: Vec<Panel> = Vec::new();

    loop {
        let value: f64 = heap.iter().map(|p| p.0.value).sum::<f64>()
            + finished.iter().map(|p| p.value).sum::<f64>();
        let error: f64 = heap.iter().map(|p| p.0.error).sum::<f64>()
            + finished.iter().map(|p| p.error).sum::<f64>()
            + extra_error;
        let target = spec.abs_tol.max(spec.rel_tol * value.abs());
        if error <= target || heap.is_empty() {
            let mut all: Vec<Panel> = heap.into_iter().map(|p| p.0).chain(finished).collect();
            all.sort_by(|x, y| x.a.total_cmp(&y.a));
            return Ok(IntegralResult {
                value: all.iter().map(|p| p.value).sum(),
                error_estimate: error,
                evaluations,
            });
        }
        if subdivisions >= spec.max_subdivisions {
            return Err(Error::NumericalFailure {
                func: "integrate",
                index: subdivisions,
                detail: format!("subdivision budget exhausted, error estimate {error:e}"),
                best_estimate: Some(value),
            });
        }
        let worst = heap.pop().expect("non-empty heap").0;
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // cannot split further in floating point
            finished.push(worst);
            continue;
        }
        heap.push(ByError(gk15(f, worst.a, mid)));
        heap.push(ByError(gk15(f, mid, worst.b)));
        evaluations += 2 * EVALS_PER_PANEL;
        subdivisions += 1;
    }
}

/// `int_a^b f(x) dx` for a finite interval.
pub fn integrate_interval<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
) -> Result<IntegralResult> {
    spec.validate()?;
    let mut breaks = vec![a];
    breaks.extend(
        spec.split_points
            .iter()
            .copied()
            .filter(|&s| s > a && s < b),
    );
    breaks.push(b);
    adaptive(&f, &breaks, spec, 0.0)
}

const TAIL_SAFETY: f64 = 1e3;

/// `int_0^inf f(t) dt` for an integrand bounded by polynomial times
/// `e^{-decay_rate t}`.
///
/// The range is cut at `U`, chosen so that the tail estimate
/// `1e3 * max_{t in [U, 2U]} |f(t)| / decay_rate` is below `abs_tol / 2`; that
/// estimate is folded into the reported error.
pub fn integrate_halfline<F: Fn(f64) -> f64>(
    f: F,
    decay_rate: f64,
    spec: &QuadratureSpec,
) -> Result<IntegralResult> {
    spec.validate()?;
    if !(decay_rate > 0.0) {
        return Err(Error::domain(
            "integrate_halfline",
            format!("decay rate {decay_rate} must be > 0"),
        ));
    }
    let last_split = spec.split_points.last().copied().unwrap_or(0.0);
    let mut upper = (8.0 / decay_rate).max(1.25 * last_split + 1.0 / decay_rate);
    let mut tail = tail_estimate(&f, upper, decay_rate);
    let mut doublings = 0;
    while tail >= 0.5 * spec.abs_tol {
        upper *= 1.5;
        tail = tail_estimate(&f, upper, decay_rate);
        doublings += 1;
        if doublings > 200 || !upper.is_finite() {
            return Err(Error::NumericalFailure {
                func: "integrate_halfline",
                index: doublings,
                detail: "integrand does not decay as declared".into(),
                best_estimate: None,
            });
        }
    }

    let mut breaks = vec![0.0];
    breaks.extend(
        spec.split_points
            .iter()
            .copied()
            .filter(|&s| s > 0.0 && s < upper),
    );
    breaks.push(upper);
    // keep the initial panels no wider than a few decay lengths
    let width = 4.0 / decay_rate;
    let mut refined = vec![breaks[0]];
    for w in breaks.windows(2) {
        let pieces = ((w[1] - w[0]) / width).ceil().max(1.0) as usize;
        for i in 1..=pieces {
            refined.push(w[0] + (w[1] - w[0]) * i as f64 / pieces as f64);
        }
    }
    let mut result = adaptive(&f, &refined, spec, tail)?;
    result.evaluations += 9 * (doublings + 1);
    Ok(result)
}

fn tail_estimate<F: Fn(f64) -> f64>(f: &F, upper: f64, decay_rate: f64) -> f64 {
    (0..=8)
        .map(|i| f(upper * (1.0 + i as f64 / 8.0)).abs())
        .fold(0.0_f64, f64::max)
        * TAIL_SAFETY
        / decay_rate
}

/// `x ln x` with the convention `0 ln 0 = 0`.
pub fn xlogx(x: f64) -> f64 {
    if x <= f64::MIN_POSITIVE {
        0.0
    } else {
        x * x.ln()
    }
}

/// `-int_0^inf q ln q`, with panels split at the zeros of `q`.
pub fn entropy_integral<F: Fn(f64) -> f64>(
    q: F,
    zeros: &[f64],
    decay_rate: f64,
    spec: &QuadratureSpec,
) -> Result<IntegralResult> {
    let mut splits: Vec<f64> = spec
        .split_points
        .iter()
        .chain(zeros)
        .copied()
        .filter(|z| *z > 0.0)
        .collect();
    splits.sort_by(f64::total_cmp);
    splits.dedup();
    let spec = QuadratureSpec {
        split_points: splits,
        ..spec.clone()
    };
    integrate_halfline(|t| -xlogx(q(t)), decay_rate, &spec)
}
