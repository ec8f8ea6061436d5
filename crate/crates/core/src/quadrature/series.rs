use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: f64,
    /// Index of the last term included.
    pub last_index: usize,
    pub tail_bound: f64,
}

/// Sums `term(0) + term(1) + ...` until `tail_bound(J) <= tol`, where
/// `tail_bound(J)` bounds `|sum_{j > J} term(j)|`. Uses compensated summation
/// in index order.
pub fn series_sum<T, B>(term: T, tail_bound: B, tol: f64, max_terms: usize) -> Result<SeriesResult>
where
    T: Fn(usize) -> f64,
    B: Fn(usize) -> f64,
{
    let mut sum = 0.0_f64;
    let mut comp = 0.0_f64;
    for j in 0..max_terms {
        let t = term(j);
        let s = sum + t;
        comp += if sum.abs() >= t.abs() {
            (sum - s) + t
        } else {
            (t - s) + sum
        };
        sum = s;
        let tail = tail_bound(j);
        if tail <= tol {
            return Ok(SeriesResult {
                value: sum + comp,
                last_index: j,
                tail_bound: tail,
            });
        }
    }
    Err(Error::NumericalFailure {
        func: "series_sum",
        index: max_terms,
        detail: "term budget exhausted before the tail bound was met".into(),
        best_estimate: Some(sum + comp),
    })
}
