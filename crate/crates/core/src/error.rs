use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("degree {degree} exceeds the cap of {cap} points")]
    DegreeCapExceeded { degree: usize, cap: usize },

    #[error("group order exceeds the cap of {cap} elements")]
    OrderCapExceeded { cap: usize },

    #[error("group of order {order} exceeds the lattice cap of {cap}")]
    LatticeCapExceeded { order: usize, cap: usize },

    #[error("not a permutation: {0}")]
    NotBijective(String),

    #[error("empty generator list")]
    NoGenerators,

    #[error("sets belong to different groups (universe {left} vs {right})")]
    ParentMismatch { left: usize, right: usize },

    #[error("subset is not a subgroup")]
    NotSubgroup,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("subgroup is not contained in the ambient subgroup")]
    NotContained,

    #[error("{p} does not divide the group order {order}")]
    PrimeDoesNotDivide { p: usize, order: usize },

    #[error("{0} is not prime")]
    NotPrime(usize),

    #[error("element is not in the group")]
    NotInGroup,

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown group `{0}`")]
    UnknownGroup(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// True for errors caused by a resource cap rather than bad input.
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            Error::OrderCapExceeded { .. }
                | Error::LatticeCapExceeded { .. }
                | Error::DegreeCapExceeded { .. }
        )
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
