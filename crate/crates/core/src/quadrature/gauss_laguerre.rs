use crate::error::Result;
use crate::specfun::{laguerre_zeros, log_gamma};

pub const MAX_NODES: u32 = 200;

/// Nodes and weights of an `N`-point Gauss rule.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `sum_i w_i f(x_i)`.
    pub fn apply<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// Gauss-Laguerre rule for `int_0^inf e^{-t} f(t) dt`, exact for polynomial
/// `f` of degree `<= 2N - 1`.
pub fn gauss_laguerre_rule(n: u32) -> Result<GaussRule> {
    generalized_gauss_laguerre_rule(n, 0.0)
}

/// Rule for the weight `t^alpha e^{-t}`.
///
/// Nodes are the Newton-polished Jacobi-matrix eigenvalues. Weights come from
/// the Christoffel function `w_i = 1 / sum_k p_k(x_i)^2` over the orthonormal
/// polynomials, a sum of positive terms that is rescaled as it grows so the
/// far nodes of large rules underflow instead of overflowing.
pub fn generalized_gauss_laguerre_rule(n: u32, alpha: f64) -> Result<GaussRule> {
    if n == 0 || n > MAX_NODES {
        return Err(crate::Error::domain(
            "gauss_laguerre_rule",
            format!("N = {n} outside 1..={MAX_NODES}"),
        ));
    }
    let nodes = laguerre_zeros(n, alpha)?;
    let p0 = (-0.5 * log_gamma(alpha + 1.0)?).exp();
    let weights = nodes
        .iter()
        .map(|&x| christoffel_weight(n, alpha, x, p0))
        .collect();
    Ok(GaussRule { nodes, weights })
}

fn christoffel_weight(n: u32, alpha: f64, x: f64, p0: f64) -> f64 {
    const BIG: f64 = 1e100;
    let mut prev = 0.0;
    let mut cur = p0;
    let mut sum = cur * cur;
    let mut log_scale = 0.0;
    for k in 0..n.saturating_sub(1) {
        let kf = k as f64;
        let diag = 2.0 * kf + alpha + 1.0;
        let off_k = (kf * (kf + alpha)).sqrt();
        let off_next = ((kf + 1.0) * (kf + 1.0 + alpha)).sqrt();
        let next = ((x - diag) * cur - off_k * prev) / off_next;
        prev = cur;
        cur = next;
        sum += cur * cur;
        if cur.abs() > BIG {
            cur /= BIG;
            prev /= BIG;
            sum /= BIG * BIG;
            log_scale += BIG.ln();
        }
    }
    (-2.0 * log_scale).exp() / sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::factorial;

    #[test]
    fn one_and_two_points() {
        let r = gauss_laguerre_rule(1).unwrap();
        assert_eq!(r.nodes, vec![1.0]);
        assert!((r.weights[0] - 1.0).abs() < 1e-15);

        let s2 = std::f64::consts::SQRT_2;
        let r = gauss_laguerre_rule(2).unwrap();
        assert!((r.nodes[0] - (2.0 - s2)).abs() < 1e-14);
        assert!((r.nodes[1] - (2.0 + s2)).abs() < 1e-14);
        assert!((r.weights[0] - (2.0 + s2) / 4.0).abs() < 1e-14);
        assert!((r.weights[1] - (2.0 - s2) / 4.0).abs() < 1e-14);
    }

    #[test]
    fn moment_exactness() {
        for n in [1u32, 2, 4, 8, 16, 32, 64] {
            let r = gauss_laguerre_rule(n).unwrap();
            let total: f64 = r.weights.iter().sum();
            assert!((total - 1.0).abs() <= 1e-13, "N={n}: sum {total}");
            for k in 0..(2 * n).min(170) {
                let exact = factorial(k).unwrap();
                let got = r.apply(|t| t.powi(k as i32));
                assert!(
                    (got - exact).abs() <= 1e-12 * exact,
                    "N={n} k={k}: {got} vs {exact}"
                );
            }
        }
    }

    #[test]
    fn fifteen_factorial_with_eight_nodes() {
        let r = gauss_laguerre_rule(8).unwrap();
        let got = r.apply(|t| t.powi(15));
        assert!((got / 1_307_674_368_000.0 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn generalized_weight() {
        // int t^3 e^{-t} t^2 dt = 5!
        let r = generalized_gauss_laguerre_rule(6, 3.0).unwrap();
        assert!((r.apply(|t| t * t) / 120.0 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn large_rule_is_finite() {
        let r = gauss_laguerre_rule(200).unwrap();
        assert!(r.weights.iter().all(|w| w.is_finite() && *w >= 0.0));
        assert!((r.weights.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        assert!(gauss_laguerre_rule(201).is_err());
        assert!(gauss_laguerre_rule(0).is_err());
    }
}
