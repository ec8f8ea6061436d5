//! Partial (incomplete) Bell polynomials `B_{s,l}(a_1, ..., a_{s-l+1})`.

use crate::error::{Error, Result};
use crate::specfun::combinatorics::binomial;

#[derive(Debug, Clone, PartialEq)]
pub struct BellArgs {
    s: usize,
    l: usize,
    a: Vec<f64>,
}

impl BellArgs {
    pub fn new(s: usize, l: usize, a: Vec<f64>) -> Result<Self> {
        if l > s {
            return Err(Error::domain(
                "BellArgs",
                format!("l = {l} exceeds s = {s}"),
            ));
        }
        if a.len() != s - l + 1 {
            return Err(Error::domain(
                "BellArgs",
                format!("expected {} arguments, got {}", s - l + 1, a.len()),
            ));
        }
        Ok(BellArgs { s, l, a })
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn args(&self) -> &[f64] {
        &self.a
    }
}

/// Evaluates `B_{s,l}` with
/// `B_{s,l} = sum_i C(s-1, i-1) a_i B_{s-i, l-1}`, `B_{0,0} = 1`.
pub fn partial_bell(args: &BellArgs) -> f64 {
    let (s, l) = (args.s, args.l);
    // table[n][k] = B_{n,k}; only entries with n - k <= s - l feed B_{s,l},
    // and for those every a_i they touch is present
    let mut table = vec![vec![0.0; l + 1]; s + 1];
    table[0][0] = 1.0;
    for k in 1..=l {
        for n in k..=s {
            let mut acc = 0.0;
            for i in 1..=(n - k + 1).min(args.a.len()) {
                let coeff = binomial((n - 1) as u32, (i - 1) as u32).expect("small binomial");
                acc += coeff * args.a[i - 1] * table[n - i][k - 1];
            }
            table[n][k] = acc;
        }
    }
    table[s][l]
}
