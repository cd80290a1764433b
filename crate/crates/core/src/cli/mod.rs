//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 for invalid input or a failed verification,
//! 2 for a numerical failure (solver non-convergence, factorization error).

pub mod render;
pub mod verify;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::estimator::{EstimatorOptions, VolumeSource, Weight};
use crate::experiments::{reproduce_table, Case, RunOptions, Scale, TestProblem};
use crate::linsolve::{SolverKind, SolverOptions};
use crate::mesh::{build_tensor_mesh, io::write_mesh, Grid1D};
use render::{render_reports, render_table, Format};

/// Environment variable holding the number of table rows run concurrently.
pub const THREADS_ENV: &str = "ANISOFEM_THREADS";

#[derive(Debug, Parser)]
#[command(name = "anisofem", version, about = "P1 Poisson solver and lower error estimators on anisotropic meshes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ProblemArg {
    Sine,
    Layer,
    Oblique,
    Linear,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum EstimatorArg {
    Bubble,
    Uniform,
    Both,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SolverArg {
    Auto,
    Pcg,
    Direct,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum VolumeArg {
    Lagrange,
    Average,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FormatArg {
    Text,
    Csv,
    Full,
    Md,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ScaleArg {
    Desk,
    Full,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Suite {
    Identities,
    Bubble,
    Strips,
    Paths,
}

#[derive(Debug, clap::Args)]
pub struct SolverArgs {
    #[arg(long, value_enum, default_value = "auto")]
    pub solver: SolverArg,
    /// Relative residual tolerance.
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    /// Iteration cap for conjugate gradients.
    #[arg(long)]
    pub max_iter: Option<usize>,
    /// Short-edge threshold `|S| < c * diam(omega_S)`.
    #[arg(long, default_value_t = 0.5)]
    pub c_short: f64,
    /// Source approximation in the element terms of the lower estimator.
    #[arg(long, value_enum, default_value = "lagrange")]
    pub volume: VolumeArg,
}

impl SolverArgs {
    fn options(&self) -> Result<RunOptions> {
        if !(self.tol > 0.0) {
            return Err(Error::InvalidParameter(format!("--tol must be positive, got {}", self.tol)));
        }
        if !(self.c_short > 0.0) {
            return Err(Error::InvalidParameter(format!("--c-short must be positive, got {}", self.c_short)));
        }
        let kind = match self.solver {
            SolverArg::Auto => SolverKind::Auto,
            SolverArg::Pcg => SolverKind::Pcg,
            SolverArg::Direct => SolverKind::Direct,
        };
        let volume = match self.volume {
            VolumeArg::Lagrange => VolumeSource::Lagrange,
            VolumeArg::Average => VolumeSource::ElementAverage,
        };
        Ok(RunOptions {
            solver: SolverOptions { kind, tol: self.tol, max_iter: self.max_iter },
            estimator: EstimatorOptions { c_short: self.c_short, volume },
            ..Default::default()
        })
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve one test problem and print its estimator report.
    Solve {
        #[arg(long, value_enum, default_value = "sine")]
        problem: ProblemArg,
        /// Frequency of the sine problem.
        #[arg(long, default_value_t = 1.0)]
        a: f64,
        /// Layer width of the layer and oblique problems.
        #[arg(long, default_value_t = 0.25)]
        eps: f64,
        #[arg(long, default_value_t = 20)]
        nx: usize,
        #[arg(long, default_value_t = 40)]
        ny: usize,
        #[arg(long, value_enum, default_value = "both")]
        estimator: EstimatorArg,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        /// Also write `<edge> <a> <b> <J_S>` for every interior edge.
        #[arg(long)]
        dump_jumps: Option<PathBuf>,
        /// Also write the nodal values of the discrete solution.
        #[arg(long)]
        dump_solution: Option<PathBuf>,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Reproduce one of the three benchmark tables.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        id: u8,
        #[arg(long, value_enum, default_value = "desk")]
        scale: ScaleArg,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
        /// Write into this directory as `table<id>_<scale>.csv` instead of stdout.
        #[arg(long)]
        out_dir: Option<PathBuf>,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Finest `N` used by the suite.
        #[arg(long, default_value_t = 80)]
        max_n: usize,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Build a tensor mesh of `(0,1) x (0,eps)` and write it to a file.
    Mesh {
        #[arg(long)]
        nx: usize,
        #[arg(long)]
        ny: usize,
        /// Height of the domain.
        #[arg(long, default_value_t = 1.0)]
        eps: f64,
        #[arg(long)]
        dump: PathBuf,
    },
}

/// Parses `argv` (including the program name), runs the command and
/// returns the process exit code.
pub fn dispatch<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let mut out = std::io::stdout().lock();
    match run(cli.command, &mut out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_numerical() {
                2
            } else {
                1
            }
        }
    }
}

fn threads() -> Result<usize> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| Error::InvalidParameter(format!("{THREADS_ENV} must be a positive integer, got `{v}`"))),
        Err(_) => Ok(1),
    }
}

fn format_of(f: FormatArg) -> Format {
    match f {
        FormatArg::Text | FormatArg::Csv => Format::Csv,
        FormatArg::Full => Format::FullCsv,
        FormatArg::Md => Format::Markdown,
    }
}

/// Runs one command, writing its output to `out`. Returns `false` when a
/// verification check fails.
pub fn run(command: Command, out: &mut dyn std::io::Write) -> Result<bool> {
    match command {
        Command::Solve { problem, a, eps, nx, ny, estimator, format, dump_jumps, dump_solution, solver } => {
            let opts = solver.options()?;
            let problem = match problem {
                ProblemArg::Sine => TestProblem::sine(a)?,
                ProblemArg::Layer => TestProblem::layer(eps)?,
                ProblemArg::Oblique => TestProblem::oblique(eps)?,
                ProblemArg::Linear => TestProblem::linear(),
            };
            check_mesh_size(nx, ny)?;
            let case = Case::solve(problem, nx, ny, &opts)?;
            let report = case.global_report();
            match format {
                FormatArg::Text => {
                    let s = case.stats;
                    writeln!(out, "problem {problem}  mesh {nx}x{ny}  triangles {}", case.tri.mesh.num_triangles())?;
                    writeln!(
                        out,
                        "solver {:?}  iterations {}  relative residual {:.2e}",
                        s.method, s.iterations, s.relative_residual
                    )?;
                    writeln!(out, "error {}", render::sci3(report.error))?;
                    writeln!(out, "||h_T(f-f^I)|| {}", render::sci3(case.norms().h_f_err))?;
                    let weights: &[Weight] = match estimator {
                        EstimatorArg::Bubble => &[Weight::Bubble],
                        EstimatorArg::Uniform => &[Weight::Uniform],
                        EstimatorArg::Both => &Weight::ALL,
                    };
                    for &w in weights {
                        let e = report.lower(w);
                        writeln!(
                            out,
                            "{}: E {} eff {} E0 {} E0/E {}",
                            w.name(),
                            render::sci3(e.total),
                            render::fixed2(report.effectivity(w)),
                            render::sci3(e.short),
                            render::fixed2(e.short_ratio())
                        )?;
                    }
                    writeln!(out, "upper coarse {}  upper sharp {}", render::sci3(report.upper_coarse.total), render::sci3(report.upper_sharp.total))?;
                    writeln!(out, "Y {}", render::sci3(report.y))?;
                }
                f => write!(out, "{}", render_reports(&[report], format_of(f)))?,
            }
            if let Some(path) = dump_jumps {
                let mut text = String::new();
                for e in case.tri.topo.interior_edges() {
                    let edge = case.tri.topo.edge(e);
                    text.push_str(&format!("{e} {} {} {:e}\n", edge.a, edge.b, case.jumps.get(e)));
                }
                std::fs::write(path, text)?;
            }
            if let Some(path) = dump_solution {
                std::fs::write(path, case.uh.to_text())?;
            }
            Ok(true)
        }
        Command::Table { id, scale, format, out_dir, solver } => {
            let scale = match scale {
                ScaleArg::Desk => Scale::Desk,
                ScaleArg::Full => Scale::Full,
            };
            let table = reproduce_table(id, scale, &solver.options()?, threads()?)?;
            let text = render_table(&table, format_of(format));
            match out_dir {
                Some(dir) => {
                    std::fs::create_dir_all(&dir)?;
                    let path = dir.join(table.file_name());
                    std::fs::write(&path, text)?;
                    writeln!(out, "wrote {}", path.display())?;
                }
                None => write!(out, "{text}")?,
            }
            Ok(true)
        }
        Command::Verify { suite, max_n, solver } => {
            let opts = solver.options()?;
            let levels: Vec<usize> = [20, 40, 80].into_iter().filter(|&n| n <= max_n).collect();
            if levels.len() < 2 {
                return Err(Error::InvalidParameter("--max-n must be at least 40".into()));
            }
            let checks = match suite {
                Suite::Identities => verify::identities(&[(20, 40), (20, 640), (16, 16)], 100, &opts)?,
                Suite::Bubble => verify::bubble(&levels, &[2, 8, 32], &opts)?,
                Suite::Strips => verify::strips(&levels, 8, &opts)?,
                Suite::Paths => verify::paths(&levels, &[2, 8, 32], &opts)?,
            };
            for c in &checks {
                writeln!(out, "{}", c.line())?;
            }
            Ok(checks.iter().all(|c| c.passed))
        }
        Command::Mesh { nx, ny, eps, dump } => {
            check_mesh_size(nx, ny)?;
            let mesh = build_tensor_mesh(&Grid1D::uniform(nx, 1.0)?, &Grid1D::uniform(ny, eps)?, Default::default());
            write_mesh(&mesh, &dump)?;
            writeln!(out, "wrote {} nodes, {} triangles to {}", mesh.num_nodes(), mesh.num_triangles(), dump.display())?;
            Ok(true)
        }
    }
}

fn check_mesh_size(nx: usize, ny: usize) -> Result<()> {
    if nx == 0 || ny == 0 {
        return Err(Error::InvalidParameter(format!("mesh needs at least one cell per direction, got {nx}x{ny}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (Result<bool>, String) {
        let cli = Cli::try_parse_from(std::iter::once("anisofem").chain(args.iter().copied())).unwrap();
        let mut buf = Vec::new();
        let r = run(cli.command, &mut buf);
        (r, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn solve_prints_estimates() {
        let (r, text) = run_args(&["solve", "--problem", "sine", "--a", "1", "--nx", "20", "--ny", "40", "--estimator", "uniform"]);
        assert!(r.unwrap());
        assert!(text.contains("error 1.01e-1"), "{text}");
        assert!(text.contains("uniform: E 3.81e-1 eff 3.79"), "{text}");
        assert!(!text.contains("bubble:"));
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(dispatch(["anisofem", "solve", "--bogus"]), 1);
        assert_eq!(dispatch(["anisofem", "table", "--id", "4"]), 1);
        assert_eq!(dispatch(["anisofem", "solve", "--nx", "0"]), 1);
        assert_eq!(dispatch(["anisofem", "solve", "--tol=-1"]), 1);
    }

    #[test]
    fn non_convergence_exits_two() {
        assert_eq!(dispatch(["anisofem", "solve", "--solver", "pcg", "--max-iter", "2", "--nx", "8", "--ny", "8"]), 2);
    }

    #[test]
    fn mesh_dump() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("m.txt");
        let p = path.to_str().unwrap();
        assert_eq!(dispatch(["anisofem", "mesh", "--nx", "2", "--ny", "3", "--eps", "0.5", "--dump", p]), 0);
        let mesh = crate::mesh::io::read_mesh(&path).unwrap();
        assert_eq!((mesh.num_nodes(), mesh.num_triangles()), (12, 12));
    }

    #[test]
    fn identical_runs_are_byte_identical() {
        let a = run_args(&["solve", "--format", "full", "--nx", "6", "--ny", "12"]).1;
        let b = run_args(&["solve", "--format", "full", "--nx", "6", "--ny", "12"]).1;
        assert_eq!(a, b);
        assert_eq!(a.lines().count(), 2);
    }
}
