//! The test problems, the solve-and-estimate pipeline for one mesh, strip
//! decompositions, and the benchmark tables.

mod case;
mod problems;
mod strips;
mod tables;

pub use case::{problem_mesh, run_case, Case, CaseReport, RunOptions};
pub use problems::{ProblemKind, TestProblem};
pub use strips::{max_strip_ratio, strip_region, strip_report, strip_reports, StripReport};
pub use tables::{reproduce_table, run_cases, table_cases, Scale, TableCase, TableReport, TableRow, DESK_MAX_TRIANGLES};
