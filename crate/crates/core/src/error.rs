use thiserror::Error;

use crate::Rational;

/// Errors surfaced by the algebra pipeline.
///
/// Variants split into input errors (bad polynomial text, arity mismatches,
/// out-of-range parameters) and computation errors (degenerate forms,
/// non-generic samples, internal consistency failures). The CLI maps the
/// first group to exit status 1 and the second to exit status 2.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },

    #[error("point has {got} coordinates, expected {expected}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("polynomial is zero")]
    ZeroPolynomial,

    #[error("degree {k} out of range 0..={d}")]
    DegreeOutOfRange { k: usize, d: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("(Ann_f)_1 != 0: {} linear operator(s) annihilate f; rerun with --reduce", kernel.len())]
    DegenerateVariables { kernel: Vec<Vec<Rational>> },

    #[error("f(l^perp) = 0: linear form is degenerate for this f")]
    DegenerateLinearForm,

    #[error("no point with f != 0 found after {0} draws")]
    GenericityFailure(usize),

    #[error("negative string count e({i},{j}) = {value}: rank table is not generic")]
    NonGenericRankTable { i: usize, j: usize, value: i64 },

    #[error("invalid rank profile: {0}")]
    InvalidRankProfile(String),

    #[error("string multiplicities do not tile the Ferrer diagram: {0}")]
    TilingMismatch(String),

    #[error("oracle and Hessian formula disagree at {point}: oracle {oracle}, formula {formula}")]
    Mismatch {
        point: String,
        oracle: String,
        formula: String,
    },

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("construction precondition failed: {0}")]
    Construction(String),
}

impl Error {
    /// True for errors caused by malformed user input rather than by the
    /// mathematics of a well-formed input.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::UnknownVariable(_)
                | Error::VariableMismatch { .. }
                | Error::ArityMismatch { .. }
                | Error::NotHomogeneous
                | Error::ZeroPolynomial
                | Error::DegreeOutOfRange { .. }
                | Error::InvalidArgument(_)
                | Error::Construction(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
