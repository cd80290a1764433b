//! Solves one test problem and prints the error with both lower estimators.
//!
//! cargo run --example solve_case -- [nx] [ny]

use anisofem::estimator::Weight;
use anisofem::experiments::{Case, RunOptions, TestProblem};

fn main() -> anyhow::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>());
    let nx = args.next().transpose()?.unwrap_or(20);
    let ny = args.next().transpose()?.unwrap_or(2 * nx);

    let case = Case::solve(TestProblem::sine(1.0)?, nx, ny, &RunOptions::default())?;
    let report = case.global_report();
    println!("mesh {nx}x{ny}: {} triangles, {:?} in {} iterations", case.tri.mesh.num_triangles(), case.stats.method, case.stats.iterations);
    println!("error          {:.4e}", report.error);
    println!("||h(f - f^I)|| {:.4e}", case.norms().h_f_err);
    for w in Weight::ALL {
        let e = report.lower(w);
        println!(
            "E_{:<8} {:.4e}  eff {:.3}  E° {:.4e}  E°/E {:.3}",
            w.name(),
            e.total,
            report.effectivity(w),
            e.short,
            e.short_ratio()
        );
    }
    println!("upper (coarse) {:.4e}", report.upper_coarse.total);
    println!("upper (sharp)  {:.4e}", report.upper_sharp.total);
    Ok(())
}
