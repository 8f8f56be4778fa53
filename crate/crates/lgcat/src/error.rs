use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum LgError {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable tables do not match ({0})")]
    TableMismatch(String),
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("parity mismatch: {0}")]
    ParityMismatch(String),
    #[error("not a chain map: fails on generator `{gen}`: d(f({gen})) - f(d({gen})) = {defect}")]
    NotChainMap { gen: String, defect: String },
    #[error("matrix factorization invalid: {0}")]
    InvalidFactorization(String),
    #[error("potential mismatch: {0}")]
    PotentialMismatch(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("composition mismatch: {0}")]
    CompositionMismatch(String),
    #[error("exact division failed: nonzero remainder {0}")]
    DivisionRemainder(String),
    #[error("weight grading unsound: {0}")]
    Grading(String),
    #[error("undefined reference `{0}`")]
    UndefinedReference(String),
    #[error("{0}")]
    Invalid(String),
    #[error("internal consistency violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, LgError>;
