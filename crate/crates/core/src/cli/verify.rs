//! Verification suites run by `anisofem verify`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::estimator::{
    jump_difference_check, vertex_identity_residual, ClassifyOptions, PathOptions, Weight,
};
use crate::experiments::{max_strip_ratio, strip_reports, Case, RunOptions, TestProblem};
use crate::fem::DiscreteField;

/// Outcome of one check.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self { name: name.into(), passed, detail: detail.into() }
    }

    pub fn line(&self) -> String {
        format!("{} {}: {}", if self.passed { "PASS" } else { "FAIL" }, self.name, self.detail)
    }
}

/// `true` when each value is at most `1 + slack` times its predecessor.
pub fn non_increasing(values: &[f64], slack: f64) -> bool {
    values.windows(2).all(|w| w[1] <= w[0] * (1.0 + slack))
}

/// Relative spread `(max - min) / min`.
pub fn spread(values: &[f64]) -> f64 {
    let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    (hi - lo) / lo
}

/// Telescoping of the gradient jumps around every node, for the discrete
/// solution and for `fields` random nodal fields on each mesh.
pub fn identities(meshes: &[(usize, usize)], fields: usize, opts: &RunOptions) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut checks = Vec::new();
    for &(nx, ny) in meshes {
        let case = Case::solve(TestProblem::sine(1.0)?, nx, ny, opts)?;
        let mut worst = vertex_identity_residual(&case.tri, &case.grads, false)?.relative();
        for _ in 0..fields {
            let v = DiscreteField::new((0..case.tri.mesh.num_nodes()).map(|_| rng.random_range(-1.0..1.0)).collect());
            worst = worst.max(vertex_identity_residual(&case.tri, &v.gradients(&case.tri.mesh), false)?.relative());
        }
        checks.push(Check::new(
            format!("vertex identity {nx}x{ny}"),
            worst < 1e-12,
            format!("max vertex residual {worst:.2e} < 1e-12 (relative to max |grad u_h|)"),
        ));
        // u_h continued by zero outside the domain, with zero boundary values
        let zero_trace = DiscreteField::new(
            case.tri
                .mesh
                .nodes()
                .iter()
                .enumerate()
                .map(|(z, _)| if case.tri.mesh.is_boundary(z) { 0.0 } else { rng.random_range(-1.0..1.0) })
                .collect(),
        );
        let r = vertex_identity_residual(&case.tri, &zero_trace.gradients(&case.tri.mesh), true)?.relative();
        checks.push(Check::new(
            format!("zero-extended identity {nx}x{ny}"),
            r < 1e-12,
            format!("max residual with boundary nodes {r:.2e} < 1e-12"),
        ));
    }
    Ok(checks)
}

/// Fitted constants of the local bubble bounds for the sine problem.
#[derive(Debug, Clone, PartialEq)]
pub struct BubbleRow {
    pub nx: usize,
    pub ratio: usize,
    pub c_f: f64,
    pub c_j: f64,
    pub c_j_unweighted: f64,
}

pub fn bubble_rows(levels: &[usize], ratios: &[usize], opts: &RunOptions) -> Result<Vec<BubbleRow>> {
    let mut rows = Vec::new();
    for &ratio in ratios {
        for &n in levels {
            let case = Case::solve(TestProblem::sine(1.0)?, n, ratio * n, opts)?;
            let b = case.bubble_bounds();
            rows.push(BubbleRow { nx: n, ratio, c_f: b.c_f, c_j: b.c_j, c_j_unweighted: b.c_j_unweighted });
        }
    }
    Ok(rows)
}

pub fn bubble(levels: &[usize], ratios: &[usize], opts: &RunOptions) -> Result<Vec<Check>> {
    let rows = bubble_rows(levels, ratios, opts)?;
    let mut checks = Vec::new();
    for &ratio in ratios {
        let r: Vec<&BubbleRow> = rows.iter().filter(|b| b.ratio == ratio).collect();
        let cf: Vec<f64> = r.iter().map(|b| b.c_f).collect();
        let cj: Vec<f64> = r.iter().map(|b| b.c_j).collect();
        checks.push(Check::new(
            format!("bubble constants M={ratio}N"),
            non_increasing(&cf, 0.05) && non_increasing(&cj, 0.05),
            format!("C_f {cf:.3?}, C_J {cj:.3?} over N={levels:?}"),
        ));
    }
    let (first, last) = (ratios[0], ratios[ratios.len() - 1]);
    let max_of = |ratio: usize, c: fn(&BubbleRow) -> f64| {
        rows.iter().filter(|b| b.ratio == ratio).map(c).fold(0.0, f64::max)
    };
    let at = |ratio: usize| max_of(ratio, |b| b.c_j_unweighted);
    let relative = |ratio: usize| at(ratio) / max_of(ratio, |b| b.c_j);
    let growth = at(last) / at(first);
    checks.push(Check::new(
        format!("unweighted jump constant growth M={first}N..{last}N"),
        growth >= 3.0,
        format!(
            "C_J with unit weight {:.3} -> {:.3}, growth {growth:.3} (needs >= 3); relative to the weighted C_J it grows {:.1}x",
            at(first),
            at(last),
            relative(last) / relative(first)
        ),
    ));
    Ok(checks)
}

/// `max_i E°_i / Y_i` over interior strips for the sine problem.
pub fn strips(levels: &[usize], ratio: usize, opts: &RunOptions) -> Result<Vec<Check>> {
    let mut maxima = Vec::new();
    let mut checks = Vec::new();
    for &n in levels {
        let case = Case::solve(TestProblem::sine(1.0)?, n, ratio * n, opts)?;
        let strips = strip_reports(&case)?;
        maxima.push(max_strip_ratio(&strips, Weight::Uniform));
        let global = case.global_report();
        let sum: f64 = strips.iter().map(|s| s.e_sq(Weight::Uniform)).sum();
        let e2 = global.uniform.total.powi(2);
        checks.push(Check::new(
            format!("strip cover N={n} M={ratio}N"),
            sum >= e2 * (1.0 - 1e-12) && sum <= 2.0 * e2 * (1.0 + 1e-12),
            format!("sum of strip E^2 / global E^2 = {:.4}", sum / e2),
        ));
        let boundary = strips[0].e0_uniform == 0.0 && strips[n].e0_uniform == 0.0;
        checks.push(Check::new(format!("boundary strips N={n}"), boundary, "no short edges in the end strips"));
    }
    let s = spread(&maxima);
    checks.push(Check::new(
        format!("strip ratio stability M={ratio}N"),
        s < 0.2,
        format!("max_i E°_i/Y_i {maxima:.4?} over N={levels:?}, spread {s:.3} < 0.2"),
    ));
    Ok(checks)
}

/// Path structure and jump-difference ratios on sine-problem meshes.
pub fn paths(levels: &[usize], ratios: &[usize], opts: &RunOptions) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for &ratio in ratios {
        let mut maxima = Vec::new();
        for &n in levels {
            let m = ratio * n;
            let case = Case::solve(TestProblem::sine(1.0)?, n, m, opts)?;
            let classes = case.classes(&ClassifyOptions::default());
            let paths = case.paths(&classes, &PathOptions::default());
            let shape = paths.len() == n - 1 && paths.iter().all(|p| p.interior_nodes().len() == m - 1);
            checks.push(Check::new(
                format!("paths N={n} M={m}"),
                shape,
                format!("{} paths (want {}), interior nodes per path {:?}", paths.len(), n - 1, {
                    let mut k: Vec<usize> = paths.iter().map(|p| p.interior_nodes().len()).collect();
                    k.dedup();
                    k
                }),
            ));
            let scale = case.jumps.max_abs();
            let mut worst = 0.0f64;
            let mut consistent = true;
            for p in &paths {
                let d = jump_difference_check(&case.tri, &case.grads, &case.jumps, p, scale);
                worst = worst.max(d.max_ratio());
                consistent &= d.zero_cases_consistent();
            }
            checks.push(Check::new(
                format!("zero denominators N={n} M={m}"),
                consistent,
                "every vanishing denominator has a vanishing numerator",
            ));
            maxima.push(worst);
        }
        let bounded = maxima.iter().all(|v| v.is_finite()) && non_increasing(&maxima, 0.2);
        checks.push(Check::new(
            format!("jump-difference ratios M={ratio}N"),
            bounded,
            format!("max r_z {maxima:.4?} over N={levels:?}"),
        ));
    }
    Ok(checks)
}
