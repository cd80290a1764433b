use std::time::Instant;

use super::{dot, norm, Method, SolveStats, SparseSym};
use crate::error::{Error, Result};

pub fn default_max_iter(n: usize) -> usize {
    ((50.0 * (n as f64).sqrt()).ceil() as usize).max(50)
}

/// Iterations over which the energy-norm error is estimated.
const ENERGY_DELAY: usize = 10;

/// Jacobi-preconditioned conjugate gradients from a zero initial guess.
///
/// Stops once `||b - A x|| / ||b|| <= tol`, measured on the true residual,
/// and once the error estimate `sum_j alpha_j r_j.z_j` over the last
/// [`ENERGY_DELAY`] steps is below `tol^2 x.b`, i.e. the A-norm error is
/// about `tol` relative to `||x||_A`.
pub fn pcg_solve(a: &SparseSym, b: &[f64], tol: f64, max_iter: usize) -> Result<(Vec<f64>, SolveStats)> {
    pcg_solve_observed(a, b, tol, max_iter, |_, _| {})
}

/// [`pcg_solve`], calling `observe(k, x_k)` after every iteration.
pub fn pcg_solve_observed(
    a: &SparseSym,
    b: &[f64],
    tol: f64,
    max_iter: usize,
    mut observe: impl FnMut(usize, &[f64]),
) -> Result<(Vec<f64>, SolveStats)> {
    let start = Instant::now();
    let n = a.n();
    if b.len() != n {
        return Err(Error::InvalidParameter(format!("right-hand side has length {}, expected {n}", b.len())));
    }
    let inv_diag: Vec<f64> = a
        .diagonal()
        .into_iter()
        .enumerate()
        .map(|(i, d)| {
            if d > 0.0 {
                Ok(1.0 / d)
            } else {
                Err(Error::InvalidParameter(format!("non-positive diagonal entry {d} in row {i}")))
            }
        })
        .collect::<Result<_>>()?;

    let mut x = vec![0.0; n];
    let bnorm = norm(b);
    let stats = |iterations, relative_residual| SolveStats {
        method: Method::Pcg,
        iterations,
        relative_residual,
        wall_time: start.elapsed(),
    };
    if bnorm == 0.0 {
        return Ok((x, stats(0, 0.0)));
    }

    let mut r = b.to_vec();
    let mut z: Vec<f64> = r.iter().zip(&inv_diag).map(|(r, d)| r * d).collect();
    let mut p = z.clone();
    let mut ap = vec![0.0; n];
    let mut rz = dot(&r, &z);
    let mut rel = 1.0;
    // alpha_j * r_j.z_j = ||x_{j+1} - x_j||_A^2
    let mut steps: std::collections::VecDeque<f64> = std::collections::VecDeque::with_capacity(ENERGY_DELAY);

    for k in 1..=max_iter {
        if rz == 0.0 {
            // residual underflowed without meeting `tol`
            return Err(Error::NonConvergence { stats: stats(k - 1, rel) });
        }
        a.matvec(&p, &mut ap);
        let pap = dot(&p, &ap);
        if !(pap > 0.0) {
            return Err(Error::InvalidParameter(format!("matrix is not positive definite (p'Ap = {pap:e})")));
        }
        let alpha = rz / pap;
        for i in 0..n {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        observe(k, &x);
        if steps.len() == ENERGY_DELAY {
            steps.pop_front();
        }
        steps.push_back(alpha * rz);
        rel = norm(&r) / bnorm;
        let energy_small = || {
            let tail: f64 = steps.iter().sum();
            rel == 0.0 || n <= ENERGY_DELAY || tail <= tol * tol * dot(&x, b).abs()
        };
        if rel <= tol && energy_small() {
            // confirm on the true residual; restart from it if the
            // recursion has drifted
            a.matvec(&x, &mut ap);
            for i in 0..n {
                r[i] = b[i] - ap[i];
            }
            rel = norm(&r) / bnorm;
            if rel <= tol {
                return Ok((x, stats(k, rel)));
            }
            for i in 0..n {
                z[i] = r[i] * inv_diag[i];
            }
            p.copy_from_slice(&z);
            rz = dot(&r, &z);
            continue;
        }
        for i in 0..n {
            z[i] = r[i] * inv_diag[i];
        }
        let rz_new = dot(&r, &z);
        let beta = rz_new / rz;
        rz = rz_new;
        for i in 0..n {
            p[i] = z[i] + beta * p[i];
        }
    }
    Err(Error::NonConvergence { stats: stats(max_iter, rel) })
}
