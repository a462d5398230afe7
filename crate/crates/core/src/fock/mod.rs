//! Symmetric-function Fock space: power-sum vectors, Heisenberg and
//! cut-and-join actions, vacuum pairings, and the E-operator correlator
//! engine.

mod eword;
mod oracle;
mod vector;

pub use eword::{correlator_closed, correlator_reduce, EWord};
pub use oracle::{beta_neg_exp, oracle_onepoint, onepoint_state};
pub use vector::{cutjoin_apply, qk_apply, vacuum_pairing, FockVector, MulUPow};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FockError {
    #[error("weights sum to {got}, expected {expected}")]
    SumMismatch { expected: u32, got: u32 },
    #[error("weight and argument lists differ in length ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("weights must be positive")]
    ZeroWeight,
    #[error("E_0 evaluated at zero argument")]
    SingularArgument,
    #[error("log needs vacuum coefficient 1")]
    LogConstantTerm,
}
