use thiserror::Error;

/// Failure to evaluate an expression at an assignment.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("assignment is missing symbol `{0}`")]
    MissingSymbol(String),
    #[error("coefficient {0} has no image in the target field")]
    Coefficient(String),
    #[error("denominator factor `{0}` evaluates to zero")]
    ZeroDenominator(String),
}

/// Text parse failure with a 1-based position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} (line {line}, column {column})")]
pub struct ParseError {
    pub message: String,
    pub line: usize,
    pub column: usize,
}

impl ParseError {
    pub fn new(message: impl Into<String>, line: usize, column: usize) -> Self {
        ParseError { message: message.into(), line, column }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("algebra `{0}` is not associative")]
    NotAssociative(String),
    #[error("structure constants of `{name}` violate the {law} law")]
    Law { name: String, law: &'static str },
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("map is not invertible")]
    NotInvertible,
    #[error("map is not multiplicative on basis pair ({0}, {1})")]
    NotMultiplicative(usize, usize),
    #[error("constant {0} has no image in the target field")]
    Coefficient(String),
    #[error("unknown algebra id `{0}`")]
    UnknownAlgebra(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RbError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("operator does not satisfy the Rota-Baxter identity; refusing to classify")]
    NotRotaBaxter,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CatalogError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("family `{id}` is malformed: {reason}")]
    Malformed { id: String, reason: String },
    #[error("constraint violated: {0}")]
    ConstraintViolation(String),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error("family `{id}` has {count} parameters, above the search bound {bound}")]
    TooManyParameters { id: String, count: usize, bound: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search space {p}^{entries} exceeds the enumeration bound")]
    TooLarge { p: u32, entries: usize },
    #[error("unsupported prime {0}; expected one of 3, 5, 7")]
    UnsupportedPrime(u32),
    #[error("weight must be nonzero in F_p")]
    ZeroWeight,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
