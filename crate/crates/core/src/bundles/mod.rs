//! Projections of the vector bundles associated with the instanton bundle
//! and the higher corepresentations of `SU_q(2)`.

mod pairs;
mod projection;

use thiserror::Error;

use crate::hopf::HopfError;

pub use pairs::{
    equivalence_witness, is_covariant, orthogonality_holds, q_minors, tensor_pair, u1, u1_matrix, u_n, w_n, TrivPair,
};
pub use projection::{
    check_decomposition, p_n, p_n1, projection, q_n, tensor_projection, tensor_trace, DecompositionReport, Projection,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BundleError {
    #[error("not an isometry: {0}")]
    Isometry(String),
    #[error("coaction covariance fails for {0}")]
    Covariance(String),
    #[error("recursion fails for {0}")]
    Recursion(String),
    #[error("invalid projection: {0}")]
    Projection(String),
    #[error("{0}")]
    Domain(String),
    #[error(transparent)]
    Hopf(#[from] HopfError),
}
