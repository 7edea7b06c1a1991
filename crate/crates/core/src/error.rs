use thiserror::Error;

use crate::report::Report;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot promote conductors {0} and {1} to a common field")]
    ConductorMismatch(u32, u32),

    #[error("shape error: {0}")]
    Shape(String),

    #[error("tensorator J[{a},{b}] is not invertible")]
    NonInvertibleJ { a: usize, b: usize },

    #[error("evaluation data for simple {simple} does not exhibit a dual: {reason}")]
    NonRigid { simple: usize, reason: String },

    #[error("reconstructed presentation violates a Hopf axiom")]
    ReconstructionAxiomFailure(Box<Report>),

    #[error("module {module} has a commutant of dimension {commutant_dim}; not split irreducible")]
    NotSplitOrNotSemisimple { module: usize, commutant_dim: usize },

    #[error("irreducible modules are incomplete: sum of squared dimensions is {sum}, algebra dimension is {dim}")]
    Incomplete { sum: usize, dim: usize },

    #[error("module of dimension {dim} decomposes into simples of total dimension {covered}")]
    DecompositionGap { dim: usize, covered: usize },

    #[error("skeletalization produced data failing its verifiers")]
    SkeletalizationFailure(Box<Report>),

    #[error("round trip failed: {0}")]
    RoundTripFailure(String),

    #[error("cochain is not a 3-cocycle at ({}, {}, {}, {})", .0[0], .0[1], .0[2], .0[3])]
    NotACocycle([usize; 4]),

    #[error("cochain is not normalized at ({}, {}, {})", .0[0], .0[1], .0[2])]
    NotNormalized([usize; 3]),

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("schema error in field `{field}`: {message}")]
    Schema { field: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    pub(crate) fn schema(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Schema {
            field: field.into(),
            message: message.into(),
        }
    }
}
