//! Splits the domain into vertical strips of two cell columns and compares
//! the short-edge part of each strip's lower estimator with its local error.

use anisofem::estimator::Weight;
use anisofem::experiments::{max_strip_ratio, strip_reports, Case, RunOptions, TestProblem};

fn main() -> anyhow::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>());
    let n = args.next().transpose()?.unwrap_or(20);
    let ratio = args.next().transpose()?.unwrap_or(8);
    let case = Case::solve(TestProblem::sine(1.0)?, n, ratio * n, &RunOptions::default())?;
    let strips = strip_reports(&case)?;
    println!("{:>5} {:>10} {:>10} {:>10} {:>8}", "strip", "error", "Y", "E°_unif", "E°/Y");
    for s in &strips {
        println!(
            "{:>5} {:>10.3e} {:>10.3e} {:>10.3e} {:>8.3}",
            s.index,
            s.error,
            s.y,
            s.e0_uniform,
            s.short_over_y(Weight::Uniform)
        );
    }
    println!("max over interior strips: {:.4}", max_strip_ratio(&strips, Weight::Uniform));
    Ok(())
}
