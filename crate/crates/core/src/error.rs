use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatError {
    #[error("cells {a} and {b} are not composable along {m}")]
    NotComposable { m: usize, a: String, b: String },
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("composite of {a} and {b} along {m} is missing from the table")]
    Undefined { m: usize, a: String, b: String },
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("unknown {dim}-cell {name}")]
    UnknownCell { dim: usize, name: String },
    #[error("duplicate {dim}-cell {name}")]
    Duplicate { dim: usize, name: String },
    #[error("expected an object")]
    NotObject,
    #[error("boundary mismatch: {0}")]
    Boundary(String),
    #[error("not a groupoid: {0}")]
    NotGroupoid(String),
    #[error("structure is not pointed")]
    Unpointed,
    #[error("invalid structure: {0}")]
    Invalid(String),
    #[error("search budget exhausted; result inconclusive")]
    Inconclusive,
    #[error("{0}")]
    Check(String),
}

pub type Res<T> = Result<T, CatError>;
