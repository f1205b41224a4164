//! Error type shared by every operation in the crate.

use alloc::string::String;
use core::fmt;

/// Errors from series evaluation, antiderivatives and oracles.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Input outside the function's domain (e.g. x ≤ 0 with a non-integer
    /// exponent, or μ ≤ 1 for the logarithmic integral).
    Domain(String),
    /// Parameters outside the supported exponent ranges
    /// (α > β+1 for Si/Shi/Ei, α > 2β+1 for Ci/Chi).
    Scope(String),
    /// Gamma function pole (argument zero or a negative integer).
    Pole(String),
    /// The result exceeds the f64 range; `sign` is the sign of the
    /// diverging value.
    Overflow { sign: f64 },
    /// Invalid hypergeometric parameters (a lower parameter is zero or a
    /// negative integer, or p > q+1).
    InvalidParameter(String),
    /// A definite integral's interval crosses a non-integrable singularity.
    SingularityCrossed(String),
    /// The requested definite integral diverges.
    Divergent(String),
    /// Resource bound exceeded (e.g. sieve limit).
    Resource(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Scope(msg) => write!(f, "scope error: {msg}"),
            Error::Pole(msg) => write!(f, "pole: {msg}"),
            Error::Overflow { sign } => {
                let dir = if *sign < 0.0 { "-inf" } else { "+inf" };
                write!(f, "overflow: value exceeds f64 range ({dir})")
            }
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::SingularityCrossed(msg) => write!(f, "singularity crossed: {msg}"),
            Error::Divergent(msg) => write!(f, "divergent integral: {msg}"),
            Error::Resource(msg) => write!(f, "resource limit: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
