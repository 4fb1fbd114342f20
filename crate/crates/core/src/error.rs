use thiserror::Error;

/// Errors raised by series and λ-ring operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("constant term must be a unit (1 or -1), found {0}")]
    NonUnitConstant(String),
    #[error("constant term must be 1, found {0}")]
    ConstantTermNotOne(String),
    #[error("{op} requires an index of at least 1")]
    ZeroIndex { op: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
