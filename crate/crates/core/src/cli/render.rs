//! Text output: CSV in the three-digit style of the published tables, a
//! full-precision CSV that re-reads bit-exactly, and aligned markdown.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::estimator::{EstimatorReport, Weight};
use crate::experiments::{TableReport, TableRow};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    /// Three significant digits, e.g. `1.01e-1`.
    Csv,
    /// Shortest round-trip representation of every value.
    FullCsv,
    Markdown,
}

/// `1.01e-1`, `3.34e+0`: three significant digits with a signed exponent.
pub fn sci3(v: f64) -> String {
    if !v.is_finite() {
        return format!("{v}");
    }
    let s = format!("{v:.2e}");
    match s.split_once('e') {
        Some((m, e)) if !e.starts_with('-') => format!("{m}e+{e}"),
        _ => s,
    }
}

/// Effectivity indices and ratios: two decimals.
pub fn fixed2(v: f64) -> String {
    format!("{v:.2}")
}

fn full(v: f64) -> String {
    format!("{v:e}")
}

pub const TABLE_COLUMNS: [&str; 17] = [
    "problem",
    "param",
    "N",
    "M",
    "error",
    "h_f_err",
    "E_bubble",
    "E_uniform",
    "E0_bubble",
    "E0_uniform",
    "eff_bubble",
    "eff_uniform",
    "ratio_bubble",
    "ratio_uniform",
    "upper_coarse",
    "upper_sharp",
    "Y",
];

type Fmt = fn(f64) -> String;

fn row_cells(r: &TableRow, precise: bool) -> Vec<String> {
    let (v, d): (Fmt, Fmt) = if precise { (full, full) } else { (sci3, fixed2) };
    vec![
        r.problem.to_string(),
        full(r.param),
        r.nx.to_string(),
        r.ny.to_string(),
        v(r.error),
        v(r.h_f_err),
        v(r.e_bubble),
        v(r.e_uniform),
        v(r.e0_bubble),
        v(r.e0_uniform),
        d(r.effectivity(Weight::Bubble)),
        d(r.effectivity(Weight::Uniform)),
        d(r.short_ratio(Weight::Bubble)),
        d(r.short_ratio(Weight::Uniform)),
        v(r.upper_coarse),
        v(r.upper_sharp),
        v(r.y),
    ]
}

pub const REPORT_COLUMNS: [&str; 13] = [
    "region",
    "error",
    "E_bubble",
    "E_uniform",
    "E0_bubble",
    "E0_uniform",
    "eff_bubble",
    "eff_uniform",
    "ratio_bubble",
    "ratio_uniform",
    "upper_coarse",
    "upper_sharp",
    "Y",
];

fn report_cells(r: &EstimatorReport, precise: bool) -> Vec<String> {
    let (v, d): (Fmt, Fmt) = if precise { (full, full) } else { (sci3, fixed2) };
    vec![
        r.region.clone(),
        v(r.error),
        v(r.bubble.total),
        v(r.uniform.total),
        v(r.bubble.short),
        v(r.uniform.short),
        d(r.effectivity(Weight::Bubble)),
        d(r.effectivity(Weight::Uniform)),
        d(r.bubble.short_ratio()),
        d(r.uniform.short_ratio()),
        v(r.upper_coarse.total),
        v(r.upper_sharp.total),
        v(r.y),
    ]
}

fn render(header: &[&str], rows: Vec<Vec<String>>, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Csv | Format::FullCsv => {
            writeln!(out, "{}", header.join(",")).unwrap();
            for r in rows {
                writeln!(out, "{}", r.join(",")).unwrap();
            }
        }
        Format::Markdown => {
            let mut width: Vec<usize> = header.iter().map(|h| h.len()).collect();
            for r in &rows {
                for (w, c) in width.iter_mut().zip(r) {
                    *w = (*w).max(c.len());
                }
            }
            let line = |cells: Vec<String>| {
                let padded: Vec<String> = cells.iter().zip(&width).map(|(c, &w)| format!("{c:>w$}")).collect();
                format!("| {} |", padded.join(" | "))
            };
            writeln!(out, "{}", line(header.iter().map(|h| h.to_string()).collect())).unwrap();
            let rule: Vec<String> = width.iter().map(|&w| format!("{}:", "-".repeat(w.max(2) - 1))).collect();
            writeln!(out, "|{}|", rule.iter().map(|r| format!(" {r} ")).collect::<Vec<_>>().join("|")).unwrap();
            for r in rows {
                writeln!(out, "{}", line(r)).unwrap();
            }
        }
    }
    out
}

pub fn render_table(table: &TableReport, format: Format) -> String {
    let precise = format == Format::FullCsv;
    render(&TABLE_COLUMNS, table.rows.iter().map(|r| row_cells(r, precise)).collect(), format)
}

pub fn render_reports(reports: &[EstimatorReport], format: Format) -> String {
    let precise = format == Format::FullCsv;
    render(&REPORT_COLUMNS, reports.iter().map(|r| report_cells(r, precise)).collect(), format)
}

fn problem_name(s: &str) -> Option<&'static str> {
    ["sine", "layer", "oblique", "linear"].into_iter().find(|&p| p == s)
}

/// Reads rows written by [`render_table`] with [`Format::FullCsv`].
pub fn parse_table_csv(text: &str) -> Result<Vec<TableRow>> {
    let bad = |line: usize, msg: String| Error::Parse { path: "<csv>".into(), line, msg };
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, h)) if h == TABLE_COLUMNS.join(",") => {}
        _ => return Err(bad(1, "unexpected header".into())),
    }
    let mut rows = Vec::new();
    for (i, line) in lines {
        let no = i + 1;
        let c: Vec<&str> = line.split(',').collect();
        if c.len() != TABLE_COLUMNS.len() {
            return Err(bad(no, format!("expected {} fields, found {}", TABLE_COLUMNS.len(), c.len())));
        }
        let f = |k: usize| c[k].parse::<f64>().map_err(|e| bad(no, format!("{}: {e}", TABLE_COLUMNS[k])));
        let u = |k: usize| c[k].parse::<usize>().map_err(|e| bad(no, format!("{}: {e}", TABLE_COLUMNS[k])));
        rows.push(TableRow {
            problem: problem_name(c[0]).ok_or_else(|| bad(no, format!("unknown problem `{}`", c[0])))?,
            param: f(1)?,
            nx: u(2)?,
            ny: u(3)?,
            error: f(4)?,
            h_f_err: f(5)?,
            e_bubble: f(6)?,
            e_uniform: f(7)?,
            e0_bubble: f(8)?,
            e0_uniform: f(9)?,
            upper_coarse: f(14)?,
            upper_sharp: f(15)?,
            y: f(16)?,
        });
    }
    Ok(rows)
}
