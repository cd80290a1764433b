//! Sparse symmetric positive definite solvers for the reduced stiffness
//! system: Jacobi-preconditioned conjugate gradients and a sparse Cholesky
//! factorization.

mod direct;
mod pcg;
mod sparse;

use std::time::Duration;

pub use direct::cholesky_solve;
pub use pcg::{default_max_iter, pcg_solve, pcg_solve_observed};
pub use sparse::SparseSym;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Pcg,
    Cholesky,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveStats {
    pub method: Method,
    pub iterations: usize,
    /// `||b - A x|| / ||b||`, or 0 for `b = 0`.
    pub relative_residual: f64,
    pub wall_time: Duration,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SolverKind {
    Pcg,
    Direct,
    /// Cholesky, falling back to PCG if the factorization fails.
    #[default]
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    pub kind: SolverKind,
    pub tol: f64,
    /// Defaults to `50 * sqrt(n)`.
    pub max_iter: Option<usize>,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self { kind: SolverKind::Auto, tol: 1e-10, max_iter: None }
    }
}

pub fn solve(a: &SparseSym, b: &[f64], opts: &SolverOptions) -> Result<(Vec<f64>, SolveStats)> {
    if !(opts.tol > 0.0) {
        return Err(Error::InvalidParameter(format!("solver tolerance must be positive, got {}", opts.tol)));
    }
    let max_iter = opts.max_iter.unwrap_or_else(|| default_max_iter(a.n()));
    match opts.kind {
        SolverKind::Pcg => pcg_solve(a, b, opts.tol, max_iter),
        SolverKind::Direct => cholesky_solve(a, b, opts.tol),
        SolverKind::Auto => match cholesky_solve(a, b, opts.tol) {
            Err(Error::Factorization(_)) => pcg_solve(a, b, opts.tol, max_iter),
            other => other,
        },
    }
}

pub(crate) fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn relative_residual(a: &SparseSym, x: &[f64], b: &[f64]) -> f64 {
    let bn = norm(b);
    if bn == 0.0 {
        return norm(x);
    }
    let ax = a.mul(x);
    let r: f64 = ax.iter().zip(b).map(|(p, q)| (q - p) * (q - p)).sum::<f64>().sqrt();
    r / bn
}
