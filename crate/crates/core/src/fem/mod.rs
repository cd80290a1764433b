//! P1 discretization of `-Δu = f` with Dirichlet data: interpolants,
//! assembly, the solve pipeline and the error and data norms.
//!
//! All element loops run sequentially in element order, so every sum is
//! accumulated in the same order on every run.

mod assembly;
mod element;
mod field;
mod norms;
pub mod quadrature;
mod solve;

pub use assembly::{assemble_load, assemble_stiffness, LinearSystem};
pub use element::{barycentric_gradients, linear_gradient, linear_l2_sq, local_mass, local_stiffness};
pub use field::{nodal_interpolant, quadratic_interpolant, DiscreteField, P2Field};
pub use norms::{element_data, energy_error, energy_error_sq, weighted_norms, ElementData, WeightedNorms};
pub use solve::solve_poisson;

/// A problem with known solution: `u`, its gradient, and `f = -Δu`.
/// The Dirichlet data is the trace of `u`.
pub trait ExactSolution {
    fn u(&self, x: f64, y: f64) -> f64;
    fn grad(&self, x: f64, y: f64) -> [f64; 2];
    fn f(&self, x: f64, y: f64) -> f64;
}
