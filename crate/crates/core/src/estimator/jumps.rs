use crate::error::{Error, Result};
use crate::fem::DiscreteField;
use crate::mesh::Triangulation;

/// Unit normal of edge `e`, pointing from its left triangle to its right one.
pub fn edge_normal(tri: &Triangulation, e: usize) -> [f64; 2] {
    let edge = tri.topo.edge(e);
    let (p, q) = (tri.mesh.nodes()[edge.a], tri.mesh.nodes()[edge.b]);
    let len = tri.geom.edge_length[e];
    [(q[1] - p[1]) / len, (p[0] - q[0]) / len]
}

/// Signed normal-derivative jumps `J_S = nu_S . (grad u_h|left - grad u_h|right)`,
/// one entry per edge and zero on boundary edges.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeJumps {
    pub values: Vec<f64>,
}

impl EdgeJumps {
    pub fn get(&self, e: usize) -> f64 {
        self.values[e]
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

pub fn jump_residuals(tri: &Triangulation, uh: &DiscreteField) -> EdgeJumps {
    jumps_from_gradients(tri, &uh.gradients(&tri.mesh))
}

pub fn jumps_from_gradients(tri: &Triangulation, grads: &[[f64; 2]]) -> EdgeJumps {
    let values = tri
        .topo
        .edges()
        .iter()
        .enumerate()
        .map(|(e, edge)| match (edge.left, edge.right) {
            (Some(l), Some(r)) => {
                let nu = edge_normal(tri, e);
                nu[0] * (grads[l][0] - grads[r][0]) + nu[1] * (grads[l][1] - grads[r][1])
            }
            _ => 0.0,
        })
        .collect();
    EdgeJumps { values }
}

/// Which weight multiplies `|omega_S| J_S^2` in the lower estimator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Weight {
    /// `|S| / diam(omega_S)`
    Bubble,
    /// `1`
    Uniform,
}

impl Weight {
    pub const ALL: [Weight; 2] = [Weight::Bubble, Weight::Uniform];

    pub fn name(self) -> &'static str {
        match self {
            Weight::Bubble => "bubble",
            Weight::Uniform => "uniform",
        }
    }
}

pub fn edge_weight(tri: &Triangulation, e: usize, weight: Weight) -> Result<f64> {
    if !tri.topo.edge(e).is_interior() {
        return Err(Error::BoundaryEdge(e));
    }
    Ok(match weight {
        Weight::Bubble => tri.geom.edge_length[e] / tri.geom.patch_diam[e],
        Weight::Uniform => 1.0,
    })
}
