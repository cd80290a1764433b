use std::time::Instant;

use faer::linalg::solvers::Solve;
use faer::sparse::{SparseColMat, Triplet};
use faer::{Mat, Side};

use super::{relative_residual, Method, SolveStats, SparseSym};
use crate::error::{Error, Result};

/// Sparse Cholesky solve (fill-reducing ordering chosen by `faer`), with
/// one step of iterative refinement when the residual exceeds `tol`.
pub fn cholesky_solve(a: &SparseSym, b: &[f64], tol: f64) -> Result<(Vec<f64>, SolveStats)> {
    let start = Instant::now();
    let n = a.n();
    if b.len() != n {
        return Err(Error::InvalidParameter(format!("right-hand side has length {}, expected {n}", b.len())));
    }
    let lower: Vec<Triplet<usize, usize, f64>> = (0..n)
        .flat_map(|i| a.row(i).filter(move |&(j, _)| j <= i).map(move |(j, v)| Triplet::new(i, j, v)))
        .collect();
    let mat = SparseColMat::<usize, f64>::try_new_from_triplets(n, n, &lower)
        .map_err(|e| Error::Factorization(format!("{e:?}")))?;
    let llt = mat.as_ref().sp_cholesky(Side::Lower).map_err(|e| Error::Factorization(format!("{e:?}")))?;

    let rhs = Mat::<f64>::from_fn(n, 1, |i, _| b[i]);
    let sol = llt.solve(&rhs);
    let mut x: Vec<f64> = (0..n).map(|i| sol[(i, 0)]).collect();
    let mut iterations = 1;
    let mut rel = relative_residual(a, &x, b);
    if rel > tol {
        let ax = a.mul(&x);
        let res = Mat::<f64>::from_fn(n, 1, |i, _| b[i] - ax[i]);
        let dx = llt.solve(&res);
        for (i, xi) in x.iter_mut().enumerate() {
            *xi += dx[(i, 0)];
        }
        iterations += 1;
        rel = relative_residual(a, &x, b);
    }
    let stats = SolveStats { method: Method::Cholesky, iterations, relative_residual: rel, wall_time: start.elapsed() };
    if !(rel <= tol) && n > 0 && b.iter().any(|&v| v != 0.0) {
        return Err(Error::NonConvergence { stats });
    }
    Ok((x, stats))
}
