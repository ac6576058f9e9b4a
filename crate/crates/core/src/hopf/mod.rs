//! Hopf structure of `SU_q(2)`, its coaction on the 7-sphere and the
//! corepresentation matrices `t⁽ⁿ⁾`.

mod corep;
mod maps;
mod tensor;

use thiserror::Error;

pub use corep::{corep_checks, corep_matrix, dotted_tensor, q_symmetric_power, scalar_intertwiner, t1, CorepChecks, CorepMatrix};
pub use maps::{antipode, coaction_s7, contract_right_counit, coproduct, counit, is_coinvariant, TensorHom};
pub use tensor::{map_left, map_right, Tensor3, TensorPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HopfError {
    #[error("corepresentation invariant violated: {0}")]
    Invariant(String),
}
