use thiserror::Error;

/// Failure modes shared by every evaluator in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Argument sits on (or within tolerance of) a pole of the gamma function.
    #[error("gamma pole at {re} + {im}i")]
    Pole { re: f64, im: f64 },

    /// Result magnitude exceeds the double-precision range.
    #[error("overflow evaluating {0}")]
    Overflow(&'static str),

    /// Inputs outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// An iterative method ran out of budget before meeting its tolerance.
    #[error("no convergence after {evaluations} evaluations in {what}")]
    NoConvergence {
        what: &'static str,
        evaluations: usize,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
