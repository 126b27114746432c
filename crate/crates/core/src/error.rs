use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: String, right: String },

    #[error("operation requires a nonzero polynomial")]
    EmptyPolynomial,

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("unsupported elimination: {0}")]
    UnsupportedElimination(String),

    #[error("order violation: {0}")]
    OrderViolation(String),

    #[error("precondition not met: {0}")]
    Precondition(String),

    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),

    #[error("Groebner basis computation exceeded the degree ceiling {ceiling} (pair of degree {degree})")]
    DegreeCeiling { ceiling: u32, degree: u32 },

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("expected a curve (Hilbert polynomial of degree 1), found degree {0}")]
    NotACurve(i64),

    #[error("internal consistency check failed: {0}")]
    InternalConsistency(String),

    #[error("{source_name}:{line}:{column}: {message}")]
    Parse {
        source_name: String,
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            source_name: "<input>".to_string(),
            line,
            column,
            message: message.into(),
        }
    }

    /// Attach a file name to a parse error; other variants pass through.
    pub fn in_source(self, name: &str) -> Self {
        match self {
            Error::Parse {
                line,
                column,
                message,
                ..
            } => Error::Parse {
                source_name: name.to_string(),
                line,
                column,
                message,
            },
            other => other,
        }
    }
}
