use crate::fem::element::barycentric_gradients;
use crate::mesh::{Mesh, Topology};

/// Continuous piecewise-linear function given by its nodal values.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteField {
    values: Vec<f64>,
}

impl DiscreteField {
    pub fn new(values: Vec<f64>) -> Self {
        Self { values }
    }

    pub fn zeros(n: usize) -> Self {
        Self { values: vec![0.0; n] }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn scaled(&self, c: f64) -> Self {
        Self { values: self.values.iter().map(|v| c * v).collect() }
    }

    pub fn on_triangle(&self, tri: [usize; 3]) -> [f64; 3] {
        tri.map(|v| self.values[v])
    }

    /// Constant gradient on every triangle.
    pub fn gradients(&self, mesh: &Mesh) -> Vec<[f64; 2]> {
        assert_eq!(self.values.len(), mesh.num_nodes(), "field does not match mesh");
        (0..mesh.num_triangles())
            .map(|t| {
                let g = barycentric_gradients(mesh.vertices(t));
                let v = self.on_triangle(mesh.triangles()[t]);
                [
                    v[0] * g[0][0] + v[1] * g[1][0] + v[2] * g[2][0],
                    v[0] * g[0][1] + v[1] * g[1][1] + v[2] * g[2][1],
                ]
            })
            .collect()
    }

    /// One `<node_id> <value>` line per node.
    pub fn to_text(&self) -> String {
        self.values.iter().enumerate().map(|(z, v)| format!("{z} {v:e}\n")).collect()
    }
}

pub fn nodal_interpolant(g: impl Fn(f64, f64) -> f64, mesh: &Mesh) -> DiscreteField {
    DiscreteField::new(mesh.nodes().iter().map(|p| g(p[0], p[1])).collect())
}

/// Continuous piecewise-quadratic function: values at nodes and at edge
/// midpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct P2Field {
    pub node_values: Vec<f64>,
    pub edge_values: Vec<f64>,
}

impl P2Field {
    /// Value on triangle `t` at barycentric point `l` (ordered like the
    /// triangle's vertices).
    pub fn eval(&self, mesh: &Mesh, topo: &Topology, t: usize, l: [f64; 3]) -> f64 {
        let tri = mesh.triangles()[t];
        let te = topo.triangle_edges(t);
        let mut s = 0.0;
        for k in 0..3 {
            s += self.node_values[tri[k]] * l[k] * (2.0 * l[k] - 1.0);
            // edge k joins local vertices k and k+1
            s += self.edge_values[te[k]] * 4.0 * l[k] * l[(k + 1) % 3];
        }
        s
    }

    /// Midpoint values of the three edges of `t`, edge `k` joining local
    /// vertices `k` and `k + 1`.
    pub fn midpoints(&self, topo: &Topology, t: usize) -> [f64; 3] {
        topo.triangle_edges(t).map(|e| self.edge_values[e])
    }
}

pub fn quadratic_interpolant(g: impl Fn(f64, f64) -> f64, mesh: &Mesh, topo: &Topology) -> P2Field {
    let node_values = mesh.nodes().iter().map(|p| g(p[0], p[1])).collect();
    let edge_values = topo
        .edges()
        .iter()
        .map(|e| {
            let (p, q) = (mesh.nodes()[e.a], mesh.nodes()[e.b]);
            g(0.5 * (p[0] + q[0]), 0.5 * (p[1] + q[1]))
        })
        .collect();
    P2Field { node_values, edge_values }
}
