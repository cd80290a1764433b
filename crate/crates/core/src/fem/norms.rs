use crate::fem::element::linear_l2_sq;
use crate::fem::field::{quadratic_interpolant, DiscreteField};
use crate::fem::quadrature::{DEGREE4, EDGE_MIDPOINT};
use crate::fem::ExactSolution;
use crate::mesh::{GeomTables, Mesh, Triangulation};

/// Per-element `||grad u_h - (grad u)^I||_T^2`, where each component of the
/// exact gradient is replaced by its P1 interpolant. The integrand is
/// quadratic, so the edge-midpoint rule is exact.
pub fn energy_error_sq(mesh: &Mesh, uh: &DiscreteField, problem: &dyn ExactSolution) -> Vec<f64> {
    let nodal: Vec<[f64; 2]> = mesh.nodes().iter().map(|p| problem.grad(p[0], p[1])).collect();
    let gh = uh.gradients(mesh);
    mesh.triangles()
        .iter()
        .enumerate()
        .map(|(t, tri)| {
            let g = tri.map(|v| nodal[v]);
            let p = mesh.vertices(t);
            let area = crate::mesh::signed_area(p[0], p[1], p[2]);
            EDGE_MIDPOINT.integrate(area, |l| {
                let gx = l[0] * g[0][0] + l[1] * g[1][0] + l[2] * g[2][0];
                let gy = l[0] * g[0][1] + l[1] * g[1][1] + l[2] * g[2][1];
                (gh[t][0] - gx).powi(2) + (gh[t][1] - gy).powi(2)
            })
        })
        .collect()
}

pub fn energy_error(mesh: &Mesh, uh: &DiscreteField, problem: &dyn ExactSolution) -> f64 {
    energy_error_sq(mesh, uh, problem).iter().sum::<f64>().sqrt()
}

/// Per-element data terms of the source `f`.
#[derive(Debug, Clone, Default)]
pub struct ElementData {
    /// `||f^I||_T^2`
    pub fi_sq: Vec<f64>,
    /// `||f - f^I||_T^2` with `f` replaced by its P2 interpolant.
    pub f_err_sq: Vec<f64>,
    /// `osc(f^I; T)`: range of the nodal values.
    pub osc_fi: Vec<f64>,
    /// `osc(f; T)` sampled at vertices, edge midpoints and centroid.
    pub osc_f: Vec<f64>,
    /// Mean of the P2 interpolant of `f` over `T`.
    pub f_avg: Vec<f64>,
}

pub fn element_data(tri: &Triangulation, f: impl Fn(f64, f64) -> f64) -> ElementData {
    let (mesh, topo) = (&tri.mesh, &tri.topo);
    let p2 = quadratic_interpolant(&f, mesh, topo);
    let fi = DiscreteField::new(p2.node_values.clone());
    let nt = mesh.num_triangles();
    let mut d = ElementData {
        fi_sq: Vec::with_capacity(nt),
        f_err_sq: Vec::with_capacity(nt),
        osc_fi: Vec::with_capacity(nt),
        osc_f: Vec::with_capacity(nt),
        f_avg: Vec::with_capacity(nt),
    };
    for t in 0..nt {
        let area = tri.geom.area[t];
        let v = fi.on_triangle(mesh.triangles()[t]);
        let mids = p2.midpoints(topo, t);
        d.fi_sq.push(linear_l2_sq(area, v));
        d.f_err_sq.push(DEGREE4.integrate(area, |l| {
            let lin = l[0] * v[0] + l[1] * v[1] + l[2] * v[2];
            (p2.eval(mesh, topo, t, l) - lin).powi(2)
        }));
        d.osc_fi.push(range(v.iter().copied()));
        let c = mesh.centroid(t);
        d.osc_f.push(range(v.iter().chain(&mids).copied().chain([f(c[0], c[1])])));
        // the vertex shape functions of P2 have zero mean
        d.f_avg.push((mids[0] + mids[1] + mids[2]) / 3.0);
    }
    d
}

fn range(values: impl Iterator<Item = f64>) -> f64 {
    let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
    hi - lo
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct WeightedNorms {
    /// `||h_T (f - f^I)||`
    pub h_f_err: f64,
    /// `||f - f^I||`
    pub f_err: f64,
    /// `||H_T osc(f^I; T)||`
    pub big_h_osc_fi: f64,
    /// `||H_T osc(f; T)||`
    pub big_h_osc_f: f64,
}

/// Global data norms; `mask` restricts the sums to selected elements.
pub fn weighted_norms(geom: &GeomTables, data: &ElementData, mask: Option<&[bool]>) -> WeightedNorms {
    let mut s = [0.0; 4];
    for t in 0..geom.area.len() {
        if mask.is_some_and(|m| !m[t]) {
            continue;
        }
        let (h, big_h, a) = (geom.height[t], geom.diam[t], geom.area[t]);
        s[0] += h * h * data.f_err_sq[t];
        s[1] += data.f_err_sq[t];
        s[2] += big_h * big_h * data.osc_fi[t].powi(2) * a;
        s[3] += big_h * big_h * data.osc_f[t].powi(2) * a;
    }
    WeightedNorms {
        h_f_err: s[0].sqrt(),
        f_err: s[1].sqrt(),
        big_h_osc_fi: s[2].sqrt(),
        big_h_osc_f: s[3].sqrt(),
    }
}
