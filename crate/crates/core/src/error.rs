use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("simple root index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("weight is not minuscule: pairing {pairing} with simple root {root}")]
    NotMinuscule { root: usize, pairing: String },

    #[error("divided difference by root {root} left a nonzero remainder")]
    InexactDivision { root: usize },

    #[error("polynomial is not invariant under the parabolic Weyl group (fails s{root})")]
    NotInvariant { root: usize },

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("degree {degree} exceeds the dimension {max}")]
    DegreeTooLarge { degree: usize, max: usize },

    #[error("grades {left} and {right} do not sum to {expected}")]
    GradeMismatch {
        left: usize,
        right: usize,
        expected: usize,
    },

    #[error("class is not homogeneous")]
    InhomogeneousClass,

    #[error("singular linear system: {0}")]
    Singular(String),

    #[error("structure-constant search found {count} solutions; residuals: {residuals}")]
    SolverFailure { count: usize, residuals: String },

    #[error("non-integral coefficient in {0}")]
    NonIntegral(String),

    #[error("top Chern class of a rank {rank} bundle does not vanish: {class}")]
    RankViolation { rank: usize, class: String },

    #[error("unknown class name `{0}`")]
    UnknownClass(String),

    #[error("octonion is not a nonzero null vector")]
    NotNull,

    #[error("diagram inconsistency: {0}")]
    Diagram(String),
}
