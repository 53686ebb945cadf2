//! Shared error type for domain violations and solver outcomes.

/// Errors reported by series evaluation, radius equations, and the solver.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An argument fell outside the domain an operation is defined on.
    #[error("{name} = {value} is outside {domain}")]
    Domain {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },

    /// A polynomial violated the non-negative / leading-coefficient rules.
    #[error("invalid polynomial: {0}")]
    Polynomial(String),

    /// An operation was asked for an argument combination it does not define.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// No sign change was found while scanning for a bracket.
    #[error("no sign change on (0, {domain_hi}]: f({start}) = {f_start}")]
    NoRoot {
        domain_hi: f64,
        start: f64,
        f_start: f64,
    },
}

impl Error {
    pub fn domain(name: &'static str, value: f64, domain: &'static str) -> Self {
        Error::Domain {
            name,
            value,
            domain,
        }
    }

    /// True for the no-sign-change outcome, which callers usually map to an
    /// explicit "no radius exists" result rather than a failure.
    pub fn is_no_root(&self) -> bool {
        matches!(self, Error::NoRoot { .. })
    }
}
