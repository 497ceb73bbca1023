use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report. Each variant maps onto one of the
/// process exit codes used by the command-line tool.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown variable `{name}` at offset {offset}")]
    UnknownVariable { name: String, offset: usize },
    #[error("exponent overflow at offset {offset}: exponents are limited to 2^31")]
    ExponentOverflow { offset: usize },
    #[error("malformed document: {0}")]
    MalformedDocument(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("ideal is not primary to the maximal graded ideal: {0}")]
    NotPrimary(String),
    #[error("simplicial complex is not pure")]
    NonPureComplex,
    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

impl Error {
    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "division_by_zero",
            Error::ZeroDenominator => "zero_denominator",
            Error::Syntax { .. } => "syntax",
            Error::UnknownVariable { .. } => "unknown_variable",
            Error::ExponentOverflow { .. } => "exponent_overflow",
            Error::MalformedDocument(_) => "malformed_document",
            Error::InvalidInput(_) => "invalid_input",
            Error::NotPrimary(_) => "not_primary",
            Error::NonPureComplex => "non_pure_complex",
            Error::ResourceCap(_) => "resource_cap",
            Error::Inconsistency(_) => "internal_inconsistency",
        }
    }

    /// Process exit code: 1 internal, 2 parse, 3 invalid input, 4 resource cap.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Syntax { .. }
            | Error::UnknownVariable { .. }
            | Error::ExponentOverflow { .. }
            | Error::MalformedDocument(_) => 2,
            Error::InvalidInput(_) | Error::NotPrimary(_) | Error::NonPureComplex => 3,
            Error::ResourceCap(_) => 4,
            Error::DivisionByZero | Error::ZeroDenominator | Error::Inconsistency(_) => 1,
        }
    }
}
