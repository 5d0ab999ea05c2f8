use thiserror::Error;

/// Failures raised by the series engine and the builders layered on top of it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    /// The lowest nonzero coefficient is not a unit of the coefficient ring.
    #[error("lowest coefficient {coeff} at q^{exp} is not a unit in {ring}")]
    NonUnit { ring: &'static str, exp: i64, coeff: String },

    /// Attempted to invert a series that vanishes through its certified order.
    #[error("series vanishes through order {order}; cannot invert")]
    ZeroDivisor { order: i64 },

    /// A denominator `1 - w` collapsed to zero.
    #[error("pole: {0}")]
    Pole(String),

    /// An infinite sum or product never settled below the requested order.
    #[error("non-convergent configuration: {0}")]
    NonConvergent(String),

    /// A value that must be integral is not.
    #[error("non-integral value {0} in an integer context")]
    NonIntegral(String),

    /// Kronecker's F is only defined on residues 3 mod 4.
    #[error("F({0}) is undefined: argument must be 3 mod 4")]
    UndefinedResidue(i64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("malformed series json: {0}")]
    Json(String),
}

pub type Result<T, E = SeriesError> = std::result::Result<T, E>;
