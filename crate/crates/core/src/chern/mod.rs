//! The index pair `(ch₀, ch₁)`: the counit on the matrix trace and the
//! regularized trace of the representation on `ℓ²(ℕ²)`.

mod index;
mod shift;

use thiserror::Error;

use crate::bundles::BundleError;

pub use index::{
    additivity_check, basis_check, ch, ch1_via_decomposition, ch_e1_tensor, ch_of_trace, ch_p, ch_q, eta,
    euler_square_check, expected_ch1, k_relation_check, multiplicativity_check, rank_check, regularized_trace,
    tensor_power_check, CharacterReport, DualNumber, RelationReport,
};
pub use shift::{
    diagonal_of, diagonal_part, generator_term, rep_pi, trace_sum, word_term, DiagSymbol, Radicand, ShiftTerm, TraceSum,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChernError {
    #[error("diagonal term keeps an unpaired square root: {0}")]
    UnpairedRadical(String),
    #[error("operator is not trace class: {0}")]
    NotTraceClass(String),
    #[error("index is not an integer: {0}")]
    NonIntegerIndex(String),
    #[error("ch0 = {ch0} differs from the rank {rank}")]
    RankMismatch { ch0: i64, rank: usize },
    #[error(transparent)]
    Bundle(#[from] BundleError),
}
