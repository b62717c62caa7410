use thiserror::Error;

/// Errors produced by the distribution and numerics routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Shape/scale pair outside `alpha > 0, beta > 0`, or not finite.
    #[error("invalid parameters: alpha = {alpha}, beta = {beta} (both must be finite and > 0)")]
    Parameter { alpha: f64, beta: f64 },

    /// An argument lies outside the domain of the operation.
    #[error("{what} = {value} is outside the domain {domain}")]
    Domain {
        what: &'static str,
        value: f64,
        domain: &'static str,
    },

    /// A structural precondition (counts, ranks, orderings) was violated.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The integrand produced a non-finite value.
    #[error("integrand returned {value} at t = {at}")]
    Integrand { at: f64, value: f64 },

    /// Adaptive quadrature hit the subdivision cap before reaching tolerance.
    #[error("quadrature did not converge after {subdivisions} subdivisions (estimate {value}, error {error_estimate})")]
    NoConvergence {
        value: f64,
        error_estimate: f64,
        subdivisions: usize,
    },

    /// A series or continued fraction exhausted its iteration budget.
    #[error("{0} failed to converge")]
    Series(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(what: &'static str, value: f64, domain: &'static str) -> Error {
    Error::Domain {
        what,
        value,
        domain,
    }
}
