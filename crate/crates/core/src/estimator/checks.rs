use crate::error::{Error, Result};
use crate::estimator::jumps::{edge_normal, EdgeJumps};
use crate::estimator::paths::AnisoPath;
use crate::mesh::Triangulation;

/// Largest norm over nodes of the sum of the normal gradient jumps
/// `J_S nu_S` around the node, taken anticlockwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VertexIdentity {
    pub max_residual: f64,
    /// Node attaining `max_residual`.
    pub worst_node: Option<usize>,
    /// `max_T |grad u_h|`, the natural scale of the residual.
    pub max_gradient: f64,
    pub nodes_checked: usize,
}

impl VertexIdentity {
    pub fn relative(&self) -> f64 {
        if self.max_gradient > 0.0 {
            self.max_residual / self.max_gradient
        } else {
            self.max_residual
        }
    }
}

/// Jump of `grad u_h` across edge `e` going from `from` to `to`, reduced to
/// its normal component.
fn normal_jump(tri: &Triangulation, e: usize, from: [f64; 2], to: [f64; 2]) -> [f64; 2] {
    let nu = edge_normal(tri, e);
    let j = nu[0] * (to[0] - from[0]) + nu[1] * (to[1] - from[1]);
    [j * nu[0], j * nu[1]]
}

/// Sums the gradient jumps anticlockwise around every interior node.
/// With `extend_by_zero`, boundary nodes are included as well, with `u_h`
/// continued by zero outside the domain.
pub fn vertex_identity_residual(tri: &Triangulation, grads: &[[f64; 2]], extend_by_zero: bool) -> Result<VertexIdentity> {
    let mut out = VertexIdentity {
        max_residual: 0.0,
        worst_node: None,
        max_gradient: grads.iter().fold(0.0, |m, g| m.max(g[0].hypot(g[1]))),
        nodes_checked: 0,
    };
    for z in 0..tri.mesh.num_nodes() {
        let star = tri.topo.star(z);
        let boundary = tri.mesh.is_boundary(z);
        if star.triangles.is_empty() || (boundary && !extend_by_zero) {
            continue;
        }
        if !boundary && !star.closed {
            return Err(Error::Topology(format!("interior node {z} has an open fan")));
        }
        let k = star.triangles.len();
        let mut sum = [0.0; 2];
        let mut add = |v: [f64; 2]| {
            sum[0] += v[0];
            sum[1] += v[1];
        };
        if star.closed {
            // edges[i] separates triangles[i - 1] and triangles[i]
            for i in 0..k {
                let (prev, next) = (star.triangles[(i + k - 1) % k], star.triangles[i]);
                add(normal_jump(tri, star.edges[i], grads[prev], grads[next]));
            }
        } else {
            let zero = [0.0; 2];
            add(normal_jump(tri, star.edges[0], zero, grads[star.triangles[0]]));
            for i in 1..k {
                add(normal_jump(tri, star.edges[i], grads[star.triangles[i - 1]], grads[star.triangles[i]]));
            }
            add(normal_jump(tri, star.edges[k], grads[star.triangles[k - 1]], zero));
        }
        out.nodes_checked += 1;
        let r = sum[0].hypot(sum[1]);
        if r > out.max_residual || out.worst_node.is_none() {
            out.max_residual = out.max_residual.max(r);
            out.worst_node = Some(z);
        }
    }
    Ok(out)
}

/// Jump of the `xi`-derivative of `u_h` across path edge `e`:
/// `(grad u_h|+ - grad u_h|-) . xi` with `+` the side `xi` points to.
pub fn path_jump(tri: &Triangulation, grads: &[[f64; 2]], e: usize, xi: [f64; 2]) -> f64 {
    let edge = tri.topo.edge(e);
    let (Some(l), Some(r)) = (edge.left, edge.right) else { return 0.0 };
    let nu = edge_normal(tri, e);
    // nu points from left to right
    let (plus, minus) = if nu[0] * xi[0] + nu[1] * xi[1] >= 0.0 { (r, l) } else { (l, r) };
    (grads[plus][0] - grads[minus][0]) * xi[0] + (grads[plus][1] - grads[minus][1]) * xi[1]
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NodeRatio {
    pub node: usize,
    /// `|J'_{S+} - J'_{S-}|`
    pub numerator: f64,
    /// `h_z / H_z * sum of |J_S| over the node's other edges`
    pub denominator: f64,
}

impl NodeRatio {
    pub fn ratio(&self) -> f64 {
        self.numerator / self.denominator
    }
}

/// Ratios `r_z` along one path.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct JumpDifference {
    /// Interior path nodes with a usable denominator.
    pub interior: Vec<NodeRatio>,
    /// Path ends on the boundary, with the missing outer jump taken as zero.
    pub boundary: Vec<NodeRatio>,
    /// Nodes whose denominator vanishes; reported, never divided.
    pub zero_denominator: Vec<NodeRatio>,
    /// Threshold below which a denominator counts as zero.
    pub zero_threshold: f64,
}

impl JumpDifference {
    pub fn max_ratio(&self) -> f64 {
        self.interior.iter().map(NodeRatio::ratio).fold(0.0, f64::max)
    }

    pub fn max_boundary_ratio(&self) -> f64 {
        self.boundary.iter().map(NodeRatio::ratio).fold(0.0, f64::max)
    }

    /// True when every zero-denominator node also has a negligible numerator.
    pub fn zero_cases_consistent(&self) -> bool {
        self.zero_denominator.iter().all(|r| r.numerator <= self.zero_threshold)
    }

    fn push(&mut self, r: NodeRatio, boundary: bool) {
        if r.denominator <= self.zero_threshold {
            self.zero_denominator.push(r);
        } else if boundary {
            self.boundary.push(r);
        } else {
            self.interior.push(r);
        }
    }
}

fn off_path_sum(tri: &Triangulation, jumps: &EdgeJumps, z: usize, path_edges: &[usize]) -> f64 {
    let g = &tri.geom;
    let s: f64 = tri
        .topo
        .star(z)
        .edges
        .iter()
        .filter(|e| !path_edges.contains(e))
        .map(|&e| jumps.get(e).abs())
        .sum();
    g.star_height[z] / g.star_diam[z] * s
}

/// Ratio at a single interior node of `path`.
pub fn jump_difference_at(
    tri: &Triangulation,
    grads: &[[f64; 2]],
    jumps: &EdgeJumps,
    path: &AnisoPath,
    z: usize,
) -> Result<NodeRatio> {
    let k = path
        .interior_nodes()
        .iter()
        .position(|&v| v == z)
        .ok_or_else(|| Error::InvalidArgument(format!("node {z} is not an interior node of the path")))?;
    let (minus, plus) = if path.closed {
        (path.edges[(k + path.edges.len() - 1) % path.edges.len()], path.edges[k])
    } else {
        (path.edges[k], path.edges[k + 1])
    };
    let numerator = (path_jump(tri, grads, plus, path.xi) - path_jump(tri, grads, minus, path.xi)).abs();
    Ok(NodeRatio { node: z, numerator, denominator: off_path_sum(tri, jumps, z, &[minus, plus]) })
}

/// Ratios at every path node. `scale` sets the zero threshold
/// `1e-12 * scale` for denominators; `max |J_S|` is a natural choice.
pub fn jump_difference_check(
    tri: &Triangulation,
    grads: &[[f64; 2]],
    jumps: &EdgeJumps,
    path: &AnisoPath,
    scale: f64,
) -> JumpDifference {
    let mut out = JumpDifference { zero_threshold: 1e-12 * scale, ..Default::default() };
    for &z in path.interior_nodes() {
        out.push(jump_difference_at(tri, grads, jumps, path, z).expect("interior node"), false);
    }
    if !path.closed {
        let ends = [(path.nodes[0], path.edges[0]), (*path.nodes.last().unwrap(), *path.edges.last().unwrap())];
        for (k, (z, e)) in ends.into_iter().enumerate() {
            if path.boundary_ends[k] {
                let numerator = path_jump(tri, grads, e, path.xi).abs();
                out.push(NodeRatio { node: z, numerator, denominator: off_path_sum(tri, jumps, z, &[e]) }, true);
            }
        }
    }
    out
}

/// Fitted constants of the local bubble-function lower bounds.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BubbleBounds {
    /// `max_T h_T ||f^I||_T / (||grad e||_T + h_T ||f - f^I||_T)`
    pub c_f: f64,
    /// `max_S rho_S |omega_S| J_S^2 / (||grad e||^2_omega_S + ||h_T (f - f^I)||^2_omega_S)`
    pub c_j: f64,
    /// Same as `c_j` with `rho_S = 1`.
    pub c_j_unweighted: f64,
    /// Entities with a vanishing right-hand side but a nonzero left-hand side.
    pub anomalies: usize,
}

/// Inputs are per-element `||grad e||_T^2`, `||f^I||_T^2`, `||f - f^I||_T^2`.
pub fn bubble_bound_check(
    tri: &Triangulation,
    jumps: &EdgeJumps,
    error_sq: &[f64],
    fi_sq: &[f64],
    f_err_sq: &[f64],
) -> BubbleBounds {
    let g = &tri.geom;
    let mut out = BubbleBounds::default();
    let scale = error_sq.iter().chain(fi_sq).fold(0.0f64, |m, v| m.max(*v));
    let tiny = 1e-30 * scale.max(f64::MIN_POSITIVE);
    let mut fit = |lhs: f64, rhs: f64, c: &mut f64| {
        if rhs > tiny {
            *c = c.max(lhs / rhs);
        } else if lhs > tiny {
            out.anomalies += 1;
        }
    };
    let mut c_f = 0.0;
    for t in 0..tri.mesh.num_triangles() {
        let h = g.height[t];
        fit(h * fi_sq[t].sqrt(), error_sq[t].sqrt() + h * f_err_sq[t].sqrt(), &mut c_f);
    }
    let (mut c_j, mut c_u) = (0.0, 0.0);
    for e in tri.topo.interior_edges() {
        let lhs = g.patch_area[e] * jumps.get(e).powi(2);
        let rhs: f64 = tri.topo.edge(e).triangles().map(|t| error_sq[t] + g.height[t].powi(2) * f_err_sq[t]).sum();
        fit(g.edge_length[e] / g.patch_diam[e] * lhs, rhs, &mut c_j);
        fit(lhs, rhs, &mut c_u);
    }
    out.c_f = c_f;
    out.c_j = c_j;
    out.c_j_unweighted = c_u;
    out
}
