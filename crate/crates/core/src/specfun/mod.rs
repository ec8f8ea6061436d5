//! Special-function kernel: orthogonal polynomials, gamma-family functions,
//! terminating hypergeometric sums and partial Bell polynomials.

mod bell;
mod combinatorics;
mod gamma;
mod hypergeometric;
mod orthopoly;
mod tridiagonal;

pub use bell::{partial_bell, BellArgs};
pub use combinatorics::{
    binomial, factorial, ln_binomial, ln_factorial, ln_factorial_ratio, pochhammer, MAX_FACTORIAL,
};
pub use gamma::{digamma, digamma_int_plus_one, log_gamma, EULER_GAMMA};
pub use hypergeometric::hyp2f1_terminating;
pub use orthopoly::{
    hermite, hermite_function, laguerre, laguerre_pair_scaled, laguerre_zeros, Scaled,
};
pub use tridiagonal::symmetric_tridiagonal_eigenvalues;
