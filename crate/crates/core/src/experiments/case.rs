use crate::error::Result;
use crate::estimator::{
    bubble_bound_check, classify_nodes, estimator_report, extract_paths, jumps_from_gradients, AnisoPath, BubbleBounds,
    ClassifyOptions, EdgeJumps, EstimatorOptions, EstimatorReport, Indicators, NodeClasses, PathOptions, Region,
};
use crate::experiments::problems::TestProblem;
use crate::fem::{element_data, energy_error_sq, solve_poisson, weighted_norms, DiscreteField, ElementData, WeightedNorms};
use crate::linsolve::{SolveStats, SolverOptions};
use crate::mesh::{build_tensor_mesh, Diagonal, Grid1D, Triangulation};

/// Settings shared by every case of a run.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RunOptions {
    pub solver: SolverOptions,
    pub estimator: EstimatorOptions,
    pub diagonal: Diagonal,
}

/// Everything computed for one problem on one `nx x ny` tensor mesh.
#[derive(Debug, Clone)]
pub struct Case {
    pub problem: TestProblem,
    pub tri: Triangulation,
    pub uh: DiscreteField,
    pub stats: SolveStats,
    pub grads: Vec<[f64; 2]>,
    pub jumps: EdgeJumps,
    pub data: ElementData,
    pub indicators: Indicators,
}

/// Uniform `nx x ny` mesh of the problem's domain.
pub fn problem_mesh(problem: &TestProblem, nx: usize, ny: usize, diagonal: Diagonal) -> Result<Triangulation> {
    let (lx, ly) = problem.domain();
    let mesh = build_tensor_mesh(&Grid1D::uniform(nx, lx)?, &Grid1D::uniform(ny, ly)?, diagonal);
    Triangulation::new(mesh)
}

impl Case {
    pub fn solve(problem: TestProblem, nx: usize, ny: usize, opts: &RunOptions) -> Result<Self> {
        let tri = problem_mesh(&problem, nx, ny, opts.diagonal)?;
        let (uh, stats) = solve_poisson(&tri.mesh, &problem, &opts.solver)?;
        let grads = uh.gradients(&tri.mesh);
        let jumps = jumps_from_gradients(&tri, &grads);
        let data = element_data(&tri, |x, y| crate::fem::ExactSolution::f(&problem, x, y));
        let error_sq = energy_error_sq(&tri.mesh, &uh, &problem);
        let indicators = Indicators::new(&tri, &jumps, &data, error_sq, &opts.estimator);
        Ok(Self { problem, tri, uh, stats, grads, jumps, data, indicators })
    }

    pub fn nx(&self) -> usize {
        self.tri.mesh.structured().map_or(0, |s| s.nx())
    }

    pub fn ny(&self) -> usize {
        self.tri.mesh.structured().map_or(0, |s| s.ny())
    }

    pub fn error(&self) -> f64 {
        self.indicators.error.iter().sum::<f64>().sqrt()
    }

    pub fn norms(&self) -> WeightedNorms {
        weighted_norms(&self.tri.geom, &self.data, None)
    }

    pub fn report(&self, region: &Region) -> EstimatorReport {
        estimator_report(&self.indicators, region)
    }

    pub fn global_report(&self) -> EstimatorReport {
        self.report(&Region::whole(&self.tri))
    }

    pub fn bubble_bounds(&self) -> BubbleBounds {
        bubble_bound_check(&self.tri, &self.jumps, &self.indicators.error, &self.data.fi_sq, &self.data.f_err_sq)
    }

    pub fn classes(&self, opts: &ClassifyOptions) -> NodeClasses {
        classify_nodes(&self.tri, opts)
    }

    pub fn paths(&self, classes: &NodeClasses, opts: &PathOptions) -> Vec<AnisoPath> {
        extract_paths(&self.tri, classes, &self.indicators.short, opts)
    }
}

/// Summary of one case.
#[derive(Debug, Clone, PartialEq)]
pub struct CaseReport {
    pub problem: TestProblem,
    pub nx: usize,
    pub ny: usize,
    pub triangles: usize,
    pub stats: SolveStats,
    pub error: f64,
    pub norms: WeightedNorms,
    pub estimates: EstimatorReport,
}

impl Case {
    pub fn summary(&self) -> CaseReport {
        CaseReport {
            problem: self.problem,
            nx: self.nx(),
            ny: self.ny(),
            triangles: self.tri.mesh.num_triangles(),
            stats: self.stats,
            error: self.error(),
            norms: self.norms(),
            estimates: self.global_report(),
        }
    }
}

pub fn run_case(problem: TestProblem, nx: usize, ny: usize, opts: &RunOptions) -> Result<CaseReport> {
    Ok(Case::solve(problem, nx, ny, opts)?.summary())
}
