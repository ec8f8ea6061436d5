use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error in {func}: {detail}")]
    Domain { func: &'static str, detail: String },

    #[error("numerical failure in {func} (index {index}): {detail}")]
    NumericalFailure {
        func: &'static str,
        index: usize,
        detail: String,
        best_estimate: Option<f64>,
    },

    #[error("zero Pochhammer denominator (c)_{k} with c = {c}")]
    ZeroPochhammer { c: f64, k: usize },

    #[error("overflow evaluating {func}; use the log-domain variant")]
    Overflow { func: &'static str },
}

impl Error {
    pub(crate) fn domain(func: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            func,
            detail: detail.into(),
        }
    }

    pub(crate) fn failure(func: &'static str, index: usize, detail: impl Into<String>) -> Self {
        Error::NumericalFailure {
            func,
            index,
            detail: detail.into(),
            best_estimate: None,
        }
    }
}
