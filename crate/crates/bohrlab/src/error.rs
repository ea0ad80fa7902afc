use thiserror::Error;

/// Errors reported by the library.
///
/// Every operation validates its domain up front and returns one of
/// these instead of panicking, so the CLI can map failures to exit
/// codes.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A vector or multi-index has the wrong number of entries.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A multi-index total degree does not match the requested degree.
    #[error("degree mismatch: expected |alpha| = {expected}, got {got}")]
    DegreeMismatch { expected: u32, got: u32 },

    /// A scalar parameter lies outside its admissible range.
    #[error("parameter `{name}` = {value} outside {constraint}")]
    ParameterOutOfRange {
        name: &'static str,
        value: f64,
        constraint: &'static str,
    },

    /// Exact integer arithmetic overflowed its 128-bit representation.
    #[error("exact integer overflow computing {context}")]
    IntegerOverflow { context: &'static str },

    /// An operation requiring a nonzero input received the zero object.
    #[error("{0} must not be identically zero")]
    ZeroInput(&'static str),

    /// The sampled modulus of a series exceeds the unit bound it is
    /// assumed to satisfy.
    #[error("boundedness hypothesis violated: sampled modulus {observed} exceeds {limit}")]
    UnboundedInput { observed: f64, limit: f64 },

    /// A polynomial that must have non-negative real coefficients has
    /// a negative or non-real one.
    #[error("coefficient at {at} is not a non-negative real")]
    NegativeCoefficient { at: String },

    /// A polynomial that must be homogeneous mixes degrees.
    #[error("polynomial is not homogeneous: degrees {0} and {1} both present")]
    NotHomogeneous(u32, u32),

    /// Bad or inconsistent run configuration.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// Malformed serialized data.
    #[error("invalid serialized polynomial: {0}")]
    InvalidSerialized(String),
}
