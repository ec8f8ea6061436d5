#![allow(clippy::neg_cmp_op_on_partial_ord)] // `!(x > 0.0)` also rejects NaN

pub mod error;
pub mod specfun;

pub use error::{Error, Result};
pub mod cli;
pub mod entropy;
pub mod optimize;
pub mod phase_space;
pub mod quadrature;
pub mod report;
pub mod statistics;
