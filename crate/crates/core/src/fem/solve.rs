use crate::error::Result;
use crate::fem::assembly::{assemble_load, assemble_stiffness, LinearSystem};
use crate::fem::field::{nodal_interpolant, DiscreteField};
use crate::fem::ExactSolution;
use crate::linsolve::{solve, SolveStats, SolverOptions};
use crate::mesh::Mesh;

/// Galerkin solution with `f` replaced by `f^I` and the boundary values
/// interpolated from the exact solution.
pub fn solve_poisson(
    mesh: &Mesh,
    problem: &dyn ExactSolution,
    opts: &SolverOptions,
) -> Result<(DiscreteField, SolveStats)> {
    let stiffness = assemble_stiffness(mesh)?;
    let f_interp = nodal_interpolant(|x, y| problem.f(x, y), mesh);
    let load = assemble_load(mesh, &f_interp);
    let lift = nodal_interpolant(|x, y| problem.u(x, y), mesh);
    let system = LinearSystem::new(&stiffness, &load, mesh.boundary(), &lift)?;
    let (x, stats) = solve(&system.matrix, &system.rhs, opts)?;
    Ok((system.expand(&x), stats))
}
