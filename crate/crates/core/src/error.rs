use thiserror::Error;

/// Every failure the toolkit reports. Values are carried in their canonical
/// text form so that errors can be printed and serialized as-is.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("literal zero denominator at byte {offset}")]
    DivisionByZeroLiteral { offset: usize },

    #[error("expression simplifies to a zero denominator")]
    ZeroDenominator,

    #[error("division by zero")]
    DivisionByZero,

    #[error("point (x, t) = ({x}, {t}) is a pole")]
    PoleAtPoint { x: String, t: String },

    #[error("right division by the zero operator")]
    DivisorZero,

    #[error("denominator does not split over Q(t): factor {factor} has no root in Q(t)")]
    NonSplitDenominator { factor: String },

    #[error("nonzero residue {residue} at {pole}: antiderivative needs a logarithm")]
    NonzeroResidue { pole: String, residue: String },

    #[error("integrability violated: d_t A = {dt_a} but d_x B = {dx_b}")]
    IntegrabilityViolation { dt_a: String, dx_b: String },

    #[error("invalid obstruction problem: {0}")]
    InvalidProblem(String),

    #[error("unsupported group description: {0}")]
    UnsupportedDescription(String),

    #[error("invalid group description: {0}")]
    InvalidDescription(String),

    #[error("criterion fails: identity component has a {verdict} quotient")]
    CriterionFails { verdict: String },

    #[error("no matrix realization for semisimple factor {tag}")]
    SymbolicOnly { tag: String },

    #[error("generator index {index} out of range for {len} generators")]
    IndexOutOfRange { index: i64, len: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "SyntaxError",
            Error::DivisionByZeroLiteral { .. } => "DivisionByZeroLiteral",
            Error::ZeroDenominator => "ZeroDenominator",
            Error::DivisionByZero => "DivisionByZero",
            Error::PoleAtPoint { .. } => "PoleAtPoint",
            Error::DivisorZero => "DivisorZero",
            Error::NonSplitDenominator { .. } => "NonSplitDenominator",
            Error::NonzeroResidue { .. } => "NonzeroResidue",
            Error::IntegrabilityViolation { .. } => "IntegrabilityViolation",
            Error::InvalidProblem(_) => "InvalidProblem",
            Error::UnsupportedDescription(_) => "UnsupportedDescription",
            Error::InvalidDescription(_) => "InvalidDescription",
            Error::CriterionFails { .. } => "CriterionFails",
            Error::SymbolicOnly { .. } => "SymbolicOnly",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::InvalidInput(_) => "InvalidInput",
            Error::Internal(_) => "InternalError",
        }
    }

    /// Errors that stem from malformed text rather than from the mathematics.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. } | Error::DivisionByZeroLiteral { .. } | Error::InvalidInput(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
