use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: expected {expected} entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("binomial has identical monomials")]
    ZeroBinomial,

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("variable index {index} out of range for {n} variables")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("exponent at position {pos} must be a positive integer")]
    NonPositiveExponent { pos: usize },

    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("generators {0:?} are not relatively prime")]
    GcdNotOne(Vec<u64>),

    #[error("generators must be positive integers")]
    NonPositiveGenerator,

    #[error("expected {expected} generators, got {found}")]
    Arity { expected: usize, found: usize },

    #[error("grading is not positive")]
    NonPositiveGrading,

    #[error("input is empty")]
    Empty,

    #[error("{0} is not in the ideal")]
    NotInIdeal(String),

    #[error("{0} is not a monomial of M_J")]
    NotInMonomialIdeal(String),

    #[error("{0} is not a critical binomial")]
    NotCritical(String),

    #[error("graph is not connected")]
    Disconnected,

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn at_line(self, line: usize) -> Error {
        Error::AtLine {
            line,
            source: Box::new(self),
        }
    }
}
