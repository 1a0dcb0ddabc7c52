use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("leading block is singular")]
    SingularPivot,

    #[error("multi-index pair ({nvec:?}, {mvec:?}) is not normal")]
    NonNormal { nvec: Vec<usize>, mvec: Vec<usize> },

    #[error("evaluation point {point} lies on the support of the measure")]
    PoleOnSupport { point: String },

    #[error("repeated point {point}")]
    DuplicatePoint { point: String },

    #[error("equal arguments where distinct points are required")]
    EqualArguments,

    #[error("multi-index component would become negative")]
    NegativeComponent,

    #[error("chain depth {requested} exceeds the admissible bound {max}")]
    ChainDepthExceeded { requested: usize, max: usize },

    #[error("enumeration needs {terms} terms, cap is {cap}")]
    EnumerationCapExceeded { terms: u128, cap: u64 },

    #[error("operation requires a rank-one weight system")]
    RequiresRankOne,

    #[error("unknown quadrature preset `{0}`")]
    UnknownPreset(String),

    #[error("weight function is not evaluable over this scalar field")]
    UnsupportedWeight,

    #[error("two computation routes disagree in {context}: {lhs} vs {rhs}")]
    RouteMismatch {
        context: String,
        lhs: String,
        rhs: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
