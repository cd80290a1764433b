use crate::estimator::jumps::{EdgeJumps, Weight};
use crate::estimator::region::Region;
use crate::fem::ElementData;
use crate::mesh::Triangulation;

/// Source approximation used in the element terms of the lower estimator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VolumeSource {
    /// Nodal interpolant `f^I`.
    #[default]
    Lagrange,
    /// Piecewise constant element means of `f`.
    ElementAverage,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EstimatorOptions {
    /// Interior edges with `|S| < c_short * diam(omega_S)` are short.
    pub c_short: f64,
    pub volume: VolumeSource,
}

impl Default for EstimatorOptions {
    fn default() -> Self {
        Self { c_short: 0.5, volume: VolumeSource::Lagrange }
    }
}

/// Short-edge flags; boundary edges are never short.
pub fn short_edges(tri: &Triangulation, c_short: f64) -> Vec<bool> {
    tri.topo
        .edges()
        .iter()
        .enumerate()
        .map(|(e, edge)| edge.is_interior() && tri.geom.edge_length[e] < c_short * tri.geom.patch_diam[e])
        .collect()
}

/// Squared local contributions from which every estimator is summed.
#[derive(Debug, Clone)]
pub struct Indicators {
    /// `|omega_S| J_S^2`, zero on boundary edges.
    pub jump_sq: Vec<f64>,
    /// `|S| / diam(omega_S)`, zero on boundary edges.
    pub bubble_weight: Vec<f64>,
    pub short: Vec<bool>,
    /// `h_T^2 ||f^I||_T^2` (or with the element mean of `f`).
    pub volume_h: Vec<f64>,
    /// `H_T^2 ||f^I||_T^2`
    pub volume_big_h: Vec<f64>,
    /// `||f - f^I||_T^2`
    pub f_err: Vec<f64>,
    /// `H_T^2 osc(f^I; T)^2 |T|`
    pub osc_fi: Vec<f64>,
    /// `H_T^2 osc(f; T)^2 |T|`
    pub osc_f: Vec<f64>,
    /// `||grad(u_h - u)||_T^2`
    pub error: Vec<f64>,
}

impl Indicators {
    pub fn new(
        tri: &Triangulation,
        jumps: &EdgeJumps,
        data: &ElementData,
        error_sq: Vec<f64>,
        opts: &EstimatorOptions,
    ) -> Self {
        let g = &tri.geom;
        let mut jump_sq = vec![0.0; tri.topo.num_edges()];
        let mut bubble_weight = vec![0.0; tri.topo.num_edges()];
        for e in tri.topo.interior_edges() {
            jump_sq[e] = g.patch_area[e] * jumps.get(e).powi(2);
            bubble_weight[e] = g.edge_length[e] / g.patch_diam[e];
        }
        let nt = tri.mesh.num_triangles();
        let source_sq: Vec<f64> = match opts.volume {
            VolumeSource::Lagrange => data.fi_sq.clone(),
            VolumeSource::ElementAverage => (0..nt).map(|t| data.f_avg[t].powi(2) * g.area[t]).collect(),
        };
        Self {
            jump_sq,
            bubble_weight,
            short: short_edges(tri, opts.c_short),
            volume_h: (0..nt).map(|t| g.height[t].powi(2) * source_sq[t]).collect(),
            volume_big_h: (0..nt).map(|t| g.diam[t].powi(2) * data.fi_sq[t]).collect(),
            f_err: data.f_err_sq.clone(),
            osc_fi: (0..nt).map(|t| (g.diam[t] * data.osc_fi[t]).powi(2) * g.area[t]).collect(),
            osc_f: (0..nt).map(|t| (g.diam[t] * data.osc_f[t]).powi(2) * g.area[t]).collect(),
            error: error_sq,
        }
    }

    pub fn weight(&self, e: usize, weight: Weight) -> f64 {
        match weight {
            Weight::Bubble => self.bubble_weight[e],
            Weight::Uniform => 1.0,
        }
    }

    fn edge_sum(&self, region: &Region, f: impl Fn(usize) -> f64) -> f64 {
        (0..self.jump_sq.len()).filter(|&e| region.edges[e]).map(f).sum()
    }

    fn element_sum(region: &Region, v: &[f64]) -> f64 {
        v.iter().zip(&region.elements).filter(|(_, &inside)| inside).map(|(x, _)| x).sum()
    }
}

/// `E = {sum rho_S |omega_S| J_S^2 + ||h_T f^I||^2}^(1/2)` and its short-edge
/// part `E°` over one region.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LowerEstimate {
    pub weight: Weight,
    /// `{sum rho_S |omega_S| J_S^2}^(1/2)`
    pub jump: f64,
    /// `||h_T f^I||`
    pub volume: f64,
    pub total: f64,
    /// `E°`
    pub short: f64,
}

impl LowerEstimate {
    /// `E° / E`, zero when `E` vanishes.
    pub fn short_ratio(&self) -> f64 {
        if self.total > 0.0 {
            self.short / self.total
        } else {
            0.0
        }
    }
}

pub fn lower_estimator(ind: &Indicators, weight: Weight, region: &Region) -> LowerEstimate {
    let jump_sq = ind.edge_sum(region, |e| ind.weight(e, weight) * ind.jump_sq[e]);
    let short_sq = ind.edge_sum(region, |e| if ind.short[e] { ind.weight(e, weight) * ind.jump_sq[e] } else { 0.0 });
    let volume_sq = Indicators::element_sum(region, &ind.volume_h);
    LowerEstimate {
        weight,
        jump: jump_sq.sqrt(),
        volume: volume_sq.sqrt(),
        total: (jump_sq + volume_sq).sqrt(),
        short: short_sq.sqrt(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UpperKind {
    /// `{sum |omega_S| J_S^2 + ||H_T f^I||^2 + ||f - f^I||^2}^(1/2)`
    Coarse,
    /// `{sum |omega_S| J_S^2 + ||h_T f^I||^2 + ||f - f^I||^2 + ||H_T osc(f^I)||^2}^(1/2)`
    Sharp,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UpperEstimate {
    pub kind: UpperKind,
    pub jump: f64,
    /// `||H_T f^I||` for [`UpperKind::Coarse`], `||h_T f^I||` for [`UpperKind::Sharp`].
    pub volume: f64,
    pub f_err: f64,
    /// `||H_T osc(f^I)||`; zero for [`UpperKind::Coarse`].
    pub osc: f64,
    pub total: f64,
}

pub fn upper_estimator(ind: &Indicators, kind: UpperKind, region: &Region) -> UpperEstimate {
    let jump_sq = ind.edge_sum(region, |e| ind.jump_sq[e]);
    let f_err_sq = Indicators::element_sum(region, &ind.f_err);
    let (volume_sq, osc_sq) = match kind {
        UpperKind::Coarse => (Indicators::element_sum(region, &ind.volume_big_h), 0.0),
        UpperKind::Sharp => {
            (Indicators::element_sum(region, &ind.volume_h), Indicators::element_sum(region, &ind.osc_fi))
        }
    };
    UpperEstimate {
        kind,
        jump: jump_sq.sqrt(),
        volume: volume_sq.sqrt(),
        f_err: f_err_sq.sqrt(),
        osc: osc_sq.sqrt(),
        total: (jump_sq + volume_sq + f_err_sq + osc_sq).sqrt(),
    }
}

/// `||grad(u_h - u)||_D` and `Y_D = ||grad(u_h - u)||_D + ||H_T osc(f; T)||_D`.
pub fn local_error(ind: &Indicators, region: &Region) -> (f64, f64) {
    let err = Indicators::element_sum(region, &ind.error).sqrt();
    (err, err + Indicators::element_sum(region, &ind.osc_f).sqrt())
}

/// All estimator values over one region.
#[derive(Debug, Clone, PartialEq)]
pub struct EstimatorReport {
    pub region: String,
    /// True when the region holds no element; all values are then zero.
    pub empty: bool,
    pub error: f64,
    pub bubble: LowerEstimate,
    pub uniform: LowerEstimate,
    pub upper_coarse: UpperEstimate,
    pub upper_sharp: UpperEstimate,
    pub y: f64,
}

impl EstimatorReport {
    pub fn lower(&self, weight: Weight) -> &LowerEstimate {
        match weight {
            Weight::Bubble => &self.bubble,
            Weight::Uniform => &self.uniform,
        }
    }

    /// `E / ||grad(u_h - u)||`
    pub fn effectivity(&self, weight: Weight) -> f64 {
        self.lower(weight).total / self.error
    }
}

pub fn estimator_report(ind: &Indicators, region: &Region) -> EstimatorReport {
    let (error, y) = local_error(ind, region);
    EstimatorReport {
        region: region.label.clone(),
        empty: region.is_empty(),
        error,
        bubble: lower_estimator(ind, Weight::Bubble, region),
        uniform: lower_estimator(ind, Weight::Uniform, region),
        upper_coarse: upper_estimator(ind, UpperKind::Coarse, region),
        upper_sharp: upper_estimator(ind, UpperKind::Sharp, region),
        y,
    }
}
