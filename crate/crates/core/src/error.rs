use thiserror::Error;

/// Malformed textual input (rationals, polynomials, wedge labels, JSON specs).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error: {message}")]
pub struct ParseError {
    pub message: String,
}

impl ParseError {
    pub fn new(message: impl Into<String>) -> Self {
        ParseError {
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("invalid Lie algebra: {0}")]
    InvalidAlgebra(String),

    #[error("linear system references undeclared unknown `{0}`")]
    UndeclaredUnknown(String),

    #[error("expression is not linear in the unknowns: {0}")]
    NotLinear(String),

    #[error("generator map is singular")]
    SingularMap,

    #[error("automorphism has zero determinant")]
    SingularAutomorphism,

    #[error("not a bialgebra: co-Jacobi constraint `{constraint}` evaluates to {value}")]
    NotABialgebra { constraint: String, value: String },

    #[error("epsilon must be non-negative for class {class}, got {value}")]
    NegativeEpsilon { class: u8, value: String },

    #[error("class {0} requires an epsilon value")]
    MissingEpsilon(u8),

    #[error("class {0} takes no epsilon value")]
    UnexpectedEpsilon(u8),

    #[error("unknown orbit class `{0}`")]
    UnknownClass(String),

    #[error("eta map is not multiplicative")]
    NotMultiplicative,

    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
