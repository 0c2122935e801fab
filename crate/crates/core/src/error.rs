use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid clone spec N={n}, M={m}: require 1 <= N <= M")]
    InvalidSpec { n: u32, m: u32 },

    #[error("Schmidt index j={j} out of range: valid range is 0..={max}")]
    IndexOutOfRange { j: u32, max: u32 },

    #[error("{what} requires M >= {min}, got M={m}")]
    TooFewOutputs {
        what: &'static str,
        min: u32,
        m: u32,
    },

    #[error("concurrence {0} lies outside [0, 1]")]
    ConcurrenceOutOfRange(f64),

    #[error("{requested} qubits exceeds the dense-simulation limit of {limit}")]
    TooManyQubits { requested: usize, limit: usize },

    #[error("invalid qubit selection: {0}")]
    InvalidQubits(String),

    #[error("state is not normalized: squared norm {0}")]
    NotNormalized(f64),

    #[error("invalid density matrix: {0}")]
    InvalidDensityMatrix(String),

    #[error("invalid X-form state: {0}")]
    InvalidXForm(&'static str),

    #[error("invalid three-clone mixture: {0}")]
    InvalidMixture(&'static str),

    #[error("verification cap M={0} outside 1..=7")]
    CapOutOfRange(u32),
}
