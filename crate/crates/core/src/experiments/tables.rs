use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::estimator::Weight;
use crate::experiments::case::{Case, CaseReport, RunOptions};
use crate::experiments::problems::TestProblem;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    /// Drops the one Table 1 row whose mesh exceeds a desktop budget.
    Desk,
    Full,
}

impl FromStr for Scale {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "desk" => Ok(Scale::Desk),
            "full" => Ok(Scale::Full),
            other => Err(Error::InvalidParameter(format!("scale must be desk or full, got `{other}`"))),
        }
    }
}

impl fmt::Display for Scale {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scale::Desk => "desk",
            Scale::Full => "full",
        })
    }
}

/// Desk scale keeps meshes of at most this many triangles, except the
/// second table, whose finer level is needed for every comparison.
pub const DESK_MAX_TRIANGLES: usize = 1_000_000;

/// One case of a benchmark table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableCase {
    pub problem: TestProblem,
    pub nx: usize,
    pub ny: usize,
}

impl TableCase {
    pub fn triangles(&self) -> usize {
        2 * self.nx * self.ny
    }
}

/// Parameter grid of table `id` (1, 2 or 3).
pub fn table_cases(id: u8, scale: Scale) -> Result<Vec<TableCase>> {
    let mut cases = Vec::new();
    match id {
        1 => {
            for a in [1.0, 3.0] {
                for ratio in [2, 8, 32, 128] {
                    for n in [20, 40, 80] {
                        cases.push(TableCase { problem: TestProblem::sine(a)?, nx: n, ny: ratio * n });
                    }
                }
            }
        }
        2 => {
            for n in [320, 640] {
                for k in 2..=4 {
                    cases.push(TableCase { problem: TestProblem::layer(0.5f64.powi(k))?, nx: n, ny: 2 * n });
                }
            }
        }
        3 => {
            for k in 4..=6 {
                for n in [160, 320, 640] {
                    cases.push(TableCase { problem: TestProblem::oblique(0.5f64.powi(k))?, nx: n, ny: n });
                }
            }
        }
        other => return Err(Error::InvalidParameter(format!("table id must be 1, 2 or 3, got {other}"))),
    }
    if scale == Scale::Desk && id != 2 {
        cases.retain(|c| c.triangles() <= DESK_MAX_TRIANGLES);
    }
    Ok(cases)
}

/// One row of a benchmark table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableRow {
    pub problem: &'static str,
    /// `a` or `eps`.
    pub param: f64,
    pub nx: usize,
    pub ny: usize,
    pub error: f64,
    pub h_f_err: f64,
    pub e_bubble: f64,
    pub e_uniform: f64,
    pub e0_bubble: f64,
    pub e0_uniform: f64,
    pub upper_coarse: f64,
    pub upper_sharp: f64,
    pub y: f64,
}

impl TableRow {
    pub fn from_report(r: &CaseReport) -> Self {
        let e = &r.estimates;
        Self {
            problem: r.problem.name(),
            param: r.problem.parameter(),
            nx: r.nx,
            ny: r.ny,
            error: r.error,
            h_f_err: r.norms.h_f_err,
            e_bubble: e.bubble.total,
            e_uniform: e.uniform.total,
            e0_bubble: e.bubble.short,
            e0_uniform: e.uniform.short,
            upper_coarse: e.upper_coarse.total,
            upper_sharp: e.upper_sharp.total,
            y: e.y,
        }
    }

    pub fn effectivity(&self, w: Weight) -> f64 {
        match w {
            Weight::Bubble => self.e_bubble / self.error,
            Weight::Uniform => self.e_uniform / self.error,
        }
    }

    /// `E° / E`
    pub fn short_ratio(&self, w: Weight) -> f64 {
        let (e0, e) = match w {
            Weight::Bubble => (self.e0_bubble, self.e_bubble),
            Weight::Uniform => (self.e0_uniform, self.e_uniform),
        };
        if e > 0.0 {
            e0 / e
        } else {
            0.0
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableReport {
    pub id: u8,
    pub scale: Scale,
    pub rows: Vec<TableRow>,
}

impl TableReport {
    /// Row for the given parameter and mesh, if present.
    pub fn find(&self, param: f64, nx: usize, ny: usize) -> Option<&TableRow> {
        self.rows.iter().find(|r| r.param == param && r.nx == nx && r.ny == ny)
    }

    pub fn file_name(&self) -> String {
        format!("table{}_{}.csv", self.id, self.scale)
    }
}

/// Runs every case of table `id`, `threads` cases at a time. Rows keep the
/// order of [`table_cases`] whatever the thread count.
pub fn reproduce_table(id: u8, scale: Scale, opts: &RunOptions, threads: usize) -> Result<TableReport> {
    let cases = table_cases(id, scale)?;
    let rows = run_cases(&cases, opts, threads)?;
    Ok(TableReport { id, scale, rows })
}

pub fn run_cases(cases: &[TableCase], opts: &RunOptions, threads: usize) -> Result<Vec<TableRow>> {
    let run = |c: &TableCase| Case::solve(c.problem, c.nx, c.ny, opts).map(|case| TableRow::from_report(&case.summary()));
    let threads = threads.max(1);
    if threads == 1 {
        return cases.iter().map(run).collect();
    }
    let next = std::sync::atomic::AtomicUsize::new(0);
    let results: Vec<std::sync::Mutex<Option<Result<TableRow>>>> = cases.iter().map(|_| Default::default()).collect();
    std::thread::scope(|s| {
        for _ in 0..threads.min(cases.len()) {
            s.spawn(|| loop {
                let k = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                if k >= cases.len() {
                    break;
                }
                *results[k].lock().unwrap() = Some(run(&cases[k]));
            });
        }
    });
    results.into_iter().map(|m| m.into_inner().unwrap().expect("every case ran")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids() {
        assert_eq!(table_cases(1, Scale::Full).unwrap().len(), 24);
        let desk = table_cases(1, Scale::Desk).unwrap();
        // N=80, M=128N is dropped for both frequencies
        assert_eq!(desk.len(), 22);
        assert!(!desk.iter().any(|c| c.nx == 80 && c.ny == 128 * 80));
        assert_eq!(table_cases(2, Scale::Desk).unwrap().len(), 6);
        assert_eq!(table_cases(3, Scale::Desk).unwrap().len(), 9);
        assert!(table_cases(4, Scale::Full).is_err());
        assert_eq!("desk".parse::<Scale>().unwrap(), Scale::Desk);
        assert!("big".parse::<Scale>().is_err());
    }

    #[test]
    fn threaded_rows_keep_order() {
        let cases: Vec<TableCase> = [4, 6, 8]
            .iter()
            .map(|&n| TableCase { problem: TestProblem::sine(1.0).unwrap(), nx: n, ny: 2 * n })
            .collect();
        let opts = RunOptions::default();
        let a = run_cases(&cases, &opts, 1).unwrap();
        let b = run_cases(&cases, &opts, 3).unwrap();
        assert_eq!(a, b);
    }
}
