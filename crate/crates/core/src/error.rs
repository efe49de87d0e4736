use std::fmt;

use thiserror::Error;

/// Position-tagged parse failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line.
    pub line: usize,
    /// 1-based column, counted in characters.
    pub column: usize,
    pub kind: ParseErrorKind,
    /// Index of the offending element when parsing a generator list.
    pub element: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedToken {
        found: String,
        expected: &'static str,
    },
    UnknownVariable(String),
    BadExponent(String),
    ZeroDenominator,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character {c:?}"),
            ParseErrorKind::UnexpectedToken { found, expected } => {
                write!(f, "expected {expected}, found {found}")
            }
            ParseErrorKind::UnknownVariable(name) => write!(f, "unknown variable `{name}`"),
            ParseErrorKind::BadExponent(e) => {
                write!(f, "exponent must be a positive integer, got {e}")
            }
            ParseErrorKind::ZeroDenominator => write!(f, "zero denominator"),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(idx) = self.element {
            write!(f, "element {}: ", idx + 1)?;
        }
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.kind
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("operands live in different polynomial rings")]
    ContextMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),
    #[error("variable `{0}` already exists in the ring")]
    NameCollision(String),
    #[error("monomials have {left} and {right} exponents")]
    LengthMismatch { left: usize, right: usize },
    #[error("quotient is not finite-dimensional")]
    InfiniteDimensional,
    #[error("input is not homogeneous")]
    NotHomogeneous,
    #[error("degree {degree} out of range 0..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },
    #[error("power exponent must be at least 1, got {0}")]
    InvalidPower(u32),
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("the zero form has no proper apolar ideal")]
    ZeroForm,
    #[error("the Hilbert function is identically zero")]
    ZeroHilbertFunction,
    #[error("alpha must be nonzero")]
    ZeroAlpha,
    #[error("degree bound {bound} is below polynomial degree {degree}")]
    DegreeAboveBound { degree: usize, bound: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
