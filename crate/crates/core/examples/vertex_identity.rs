//! Sums the normal jumps of piecewise-constant gradients around every node,
//! which must telescope to zero, for the discrete solution and for random
//! nodal fields.

use anisofem::estimator::vertex_identity_residual;
use anisofem::experiments::{Case, RunOptions, TestProblem};
use anisofem::fem::DiscreteField;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> anyhow::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (nx, ny) in [(16, 16), (20, 160), (20, 640)] {
        let case = Case::solve(TestProblem::sine(1.0)?, nx, ny, &RunOptions::default())?;
        let uh = vertex_identity_residual(&case.tri, &case.grads, false)?;
        let v = DiscreteField::new((0..case.tri.mesh.num_nodes()).map(|_| rng.random_range(-1.0..1.0)).collect());
        let rand = vertex_identity_residual(&case.tri, &v.gradients(&case.tri.mesh), false)?;
        println!(
            "{nx:>3}x{ny:<4} u_h: {:.2e} (node {:?})  random field: {:.2e}  over {} nodes",
            uh.relative(),
            uh.worst_node,
            rand.relative(),
            uh.nodes_checked
        );
    }
    Ok(())
}
