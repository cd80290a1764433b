//! Linear finite elements for the Poisson problem on anisotropic
//! triangulations, with residual-based a posteriori error estimators.
//!
//! The pipeline is `mesh` → `fem` (solve, error norms) → `estimator`
//! (jump residuals, lower and upper estimators, identity checks) →
//! `experiments` (test problems and benchmark tables).

// `!(x > 0.0)` also rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod estimator;
pub mod experiments;
pub mod fem;
pub mod linsolve;
pub mod mesh;

pub use error::{Error, Result};
