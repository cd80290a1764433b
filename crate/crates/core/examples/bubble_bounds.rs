//! Fits the constants of the local bubble-function bounds for the sine
//! problem, with the patch-scaled weight and with unit weight.

use anisofem::cli::verify::bubble_rows;
use anisofem::experiments::RunOptions;

fn main() -> anyhow::Result<()> {
    let rows = bubble_rows(&[20, 40, 80], &[2, 8, 32], &RunOptions::default())?;
    println!("{:>4} {:>6} {:>8} {:>8} {:>10}", "N", "M/N", "C_f", "C_J", "C_J(w=1)");
    for r in rows {
        println!("{:>4} {:>6} {:>8.3} {:>8.3} {:>10.3}", r.nx, r.ratio, r.c_f, r.c_j, r.c_j_unweighted);
    }
    Ok(())
}
