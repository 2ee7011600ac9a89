use thiserror::Error;

/// Which side of the `2g - 2 < deg G < N` window a divisor fell out of.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WindowSide {
    /// `deg G <= 2g - 2`
    Lower,
    /// `deg G >= N`
    Upper,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid curve parameters: {0}")]
    InvalidCurve(String),

    #[error("n = {n} is out of range: expected {min} <= n <= {max}")]
    NOutOfRange { n: i64, min: i64, max: i64 },

    #[error("degree window violated: deg G = {deg_g} but need {lower} < deg G < {upper} ({})",
        match side { WindowSide::Lower => "deg G <= 2g - 2", WindowSide::Upper => "deg G >= N" })]
    DegreeWindow {
        deg_g: i64,
        lower: i64,
        upper: i64,
        side: WindowSide,
    },

    #[error("place {0} is not supported here")]
    UnsupportedPlace(String),

    #[error("duplicate place {0}")]
    DuplicatePlace(String),

    #[error("expected dimension {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("empty input")]
    EmptyInput,

    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl Error {
    /// Process exit code used by the command line front end.
    ///
    /// Malformed input is a validation failure (2); everything raised by the
    /// mathematics itself is a domain failure (3).
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidCurve(_)
            | Error::UnsupportedPlace(_)
            | Error::DuplicatePlace(_)
            | Error::DimensionMismatch { .. }
            | Error::EmptyInput => 2,
            _ => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
