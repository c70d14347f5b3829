use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative exponent {exp} on variable `{var}` (only `q` may carry negative exponents)")]
    NegativeExponent { var: String, exp: i64 },

    #[error("invalid variable name `{0}`")]
    InvalidVariable(String),

    #[error("no value assigned to variable `{0}`")]
    MissingVariable(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot parse polynomial `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("negative component {value} at position {index}")]
    NegativeComponent { index: usize, value: i64 },

    #[error("inexact division in q: nonzero remainder {0}")]
    InexactDivision(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("parameter error for `{identity}`: {reason}")]
    Schema { identity: String, reason: String },

    #[error("index {index} outside the summation domain of {identity}")]
    IndexOutOfDomain { identity: String, index: String },

    #[error("builder guard: {0}")]
    Guard(String),

    #[error("term budget of {budget} monomials exceeded")]
    BudgetExceeded { budget: usize },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("degenerate parameters for mutation {0}")]
    DegenerateMutation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
