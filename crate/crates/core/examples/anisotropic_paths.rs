//! Classifies nodes, extracts chains of anisotropic nodes joined by short
//! edges, and reports the jump-difference ratios along each chain.

use anisofem::estimator::{jump_difference_check, ClassifyOptions, PathOptions};
use anisofem::experiments::{Case, RunOptions, TestProblem};

fn main() -> anyhow::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>());
    let n = args.next().transpose()?.unwrap_or(20);
    let ratio = args.next().transpose()?.unwrap_or(8);
    let case = Case::solve(TestProblem::sine(1.0)?, n, ratio * n, &RunOptions::default())?;
    let classes = case.classes(&ClassifyOptions::default());
    println!(
        "{} anisotropic and {} regular of {} nodes (c_uni {:.3})",
        classes.count_anisotropic(),
        classes.count_regular(),
        case.tri.mesh.num_nodes(),
        classes.c_uni
    );
    let paths = case.paths(&classes, &PathOptions::default());
    println!("{} paths", paths.len());
    let scale = case.jumps.max_abs();
    for (k, p) in paths.iter().enumerate().take(5) {
        let d = jump_difference_check(&case.tri, &case.grads, &case.jumps, p, scale);
        println!(
            "path {k}: {} nodes, eta ({:.3}, {:.3}), max r_z {:.4}, {} zero denominators",
            p.nodes.len(),
            p.eta[0],
            p.eta[1],
            d.max_ratio(),
            d.zero_denominator.len()
        );
    }
    Ok(())
}
