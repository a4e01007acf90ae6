//! Error type shared by all modules.

use alloc::string::String;
use core::fmt;

/// Failures reported by the numeric and combinatorial routines.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    Domain(String),
    /// The argument lies outside the sector where the requested formula holds.
    Sector(String),
    /// A quadrature did not reach its tolerance.
    Quadrature {
        /// Best estimate as a decimal string.
        best: String,
        /// Difference between the last two refinement levels.
        last_diff: f64,
        /// Number of refinement levels used.
        levels: usize,
    },
    /// A formula hit a removable or genuine singularity.
    Singular(String),
    /// Two independent routes disagreed.
    Mismatch(String),
    /// Malformed textual input.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(m) => write!(f, "domain error: {m}"),
            Error::Sector(m) => write!(f, "sector error: {m}"),
            Error::Quadrature {
                best,
                last_diff,
                levels,
            } => write!(
                f,
                "quadrature did not converge after {levels} levels (best {best}, last difference {last_diff:e})"
            ),
            Error::Singular(m) => write!(f, "singularity: {m}"),
            Error::Mismatch(m) => write!(f, "route mismatch: {m}"),
            Error::Parse(m) => write!(f, "parse error: {m}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

/// Result alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
