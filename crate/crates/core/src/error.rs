use crate::rational::Q;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong when building or checking representation data.
///
/// Input-validation failures name the constraint that was violated.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid algebra so({p},{q}): {constraint}")]
    InvalidAlgebra {
        p: i64,
        q: i64,
        constraint: &'static str,
    },
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("label regime mismatch: {0}")]
    Regime(String),
    #[error("operation requires p+q {required}")]
    Parity { required: &'static str },
    #[error("rank mismatch: weight has {weight} coordinates, root has {root}")]
    RankMismatch { weight: usize, root: usize },
    #[error("BGG condition fails: (Λ+ρ, β∨) = {pairing}, expected {expected}")]
    BggViolated { pairing: Q, expected: u32 },
    #[error("root {0} is not a noncompact positive root")]
    NotNoncompactPositive(String),
    #[error("root {0} has no chain form usable by the closed-form singular vector")]
    NoChainForm(String),
    #[error("closed form inapplicable: denominator (λ+ρ)(H) - {shift} vanishes; use the Verma kernel instead")]
    FormulaInapplicable { shift: u32 },
    #[error("parse error: {0}")]
    Parse(String),
}
