//! Exact computer algebra for vector bundles on a quantum 4-sphere.
//!
//! The crate builds the quantum 7-sphere and the quantum group `SU_q(2)` as
//! presented *-algebras with canonical normal forms, constructs the
//! corepresentation matrices and the projections of the associated bundles,
//! and evaluates their Chern characters exactly. A classical counterpart for
//! even-dimensional spheres and a floating-point cross-check are included.

pub mod bundles;
pub mod chern;
pub mod clifford;
pub mod hopf;
pub mod ncalg;
pub mod numcheck;
pub mod qcoeff;
