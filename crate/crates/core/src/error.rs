use alloc::string::String;
use num_complex::Complex64;

/// Failure modes shared by every evaluator in the crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Argument outside the function's domain (pole, branch cut, bad parameter).
    #[error("domain error: {0}")]
    Domain(String),
    /// A configured budget (term count, evaluation count, table cap) was exhausted.
    #[error("budget exceeded: {0}")]
    Budget(String),
    /// A series stopped before its stopping rule fired.
    #[error("no convergence after {terms} terms (partial value {partial})")]
    NoConvergence { terms: usize, partial: Complex64 },
    /// A quadrature did not reach its tolerance.
    #[error("quadrature did not converge: value {value}, error estimate {err_estimate:e}")]
    Quadrature { value: Complex64, err_estimate: f64 },
    /// Cancellation in a double-word bracket would exceed the available digits.
    #[error("cancellation headroom exceeded at n = {n}: needs {digits:.1} digits, limit {limit:.1}")]
    Cancellation { n: u64, digits: f64, limit: f64 },
    /// Double-word arithmetic left the binary64 exponent range.
    #[error("overflow in double-word arithmetic")]
    Overflow,
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
