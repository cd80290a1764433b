//! Compares the two residual upper bounds with the error on the layer
//! problem as the mesh is refined.

use anisofem::experiments::{Case, RunOptions, TestProblem};

fn main() -> anyhow::Result<()> {
    let problem = TestProblem::layer(0.25)?;
    println!("{problem}");
    println!("{:>4} {:>5} {:>10} {:>12} {:>12} {:>10}", "N", "M", "error", "upper_coarse", "upper_sharp", "Y");
    for n in [20, 40, 80] {
        let case = Case::solve(problem, n, 2 * n, &RunOptions::default())?;
        let r = case.global_report();
        println!(
            "{n:>4} {:>5} {:>10.3e} {:>12.3e} {:>12.3e} {:>10.3e}",
            2 * n,
            r.error,
            r.upper_coarse.total,
            r.upper_sharp.total,
            r.y
        );
    }
    Ok(())
}
