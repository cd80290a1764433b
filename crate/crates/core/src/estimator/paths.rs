use crate::estimator::classify::NodeClasses;
use crate::mesh::Triangulation;

/// A chain of short edges through anisotropic nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct AnisoPath {
    /// Ordered nodes; `edges[k]` joins `nodes[k]` and `nodes[k + 1]`.
    pub nodes: Vec<usize>,
    pub edges: Vec<usize>,
    /// The path returns to its first node.
    pub closed: bool,
    /// Whether the first and last node lie on the domain boundary.
    pub boundary_ends: [bool; 2],
    /// Geometric mean of the smallest and largest `H_z` along the path.
    pub scale: f64,
    /// Unit direction of the least-squares line through the nodes, oriented
    /// from the first node to the last.
    pub eta: [f64; 2],
    /// `eta` turned clockwise by a right angle: the direction across the path.
    pub xi: [f64; 2],
}

impl AnisoPath {
    /// Nodes with two path edges.
    pub fn interior_nodes(&self) -> &[usize] {
        if self.closed {
            &self.nodes[..self.nodes.len() - 1]
        } else {
            &self.nodes[1..self.nodes.len() - 1]
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathOptions {
    /// Largest allowed ratio between the `H_z` of any two path nodes.
    pub kappa_h: f64,
}

impl Default for PathOptions {
    fn default() -> Self {
        Self { kappa_h: 2.0 }
    }
}

/// Maximal chains of short edges. Growth continues through a node only if it
/// is an anisotropic interior node with exactly two short edges and its
/// `H_z` keeps the path's scale spread within `kappa_h`; any other node
/// ends the chain.
pub fn extract_paths(
    tri: &Triangulation,
    classes: &NodeClasses,
    short: &[bool],
    opts: &PathOptions,
) -> Vec<AnisoPath> {
    let n = tri.mesh.num_nodes();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (e, edge) in tri.topo.edges().iter().enumerate() {
        if short[e] {
            incident[edge.a].push(e);
            incident[edge.b].push(e);
        }
    }
    let h = &tri.geom.star_diam;
    let passable = |z: usize| !tri.mesh.is_boundary(z) && classes.anisotropic[z] && incident[z].len() == 2;

    let mut used = vec![false; short.len()];
    let mut paths = Vec::new();
    for e0 in 0..short.len() {
        if !short[e0] || used[e0] {
            continue;
        }
        used[e0] = true;
        let edge = tri.topo.edge(e0);
        let (mut lo, mut hi) = (h[edge.a].min(h[edge.b]), h[edge.a].max(h[edge.b]));
        let mut nodes = std::collections::VecDeque::from([edge.a, edge.b]);
        let mut edges = std::collections::VecDeque::from([e0]);
        let mut closed = false;
        for forward in [true, false] {
            loop {
                let end = if forward { *nodes.back().unwrap() } else { *nodes.front().unwrap() };
                if !passable(end) {
                    break;
                }
                let Some(&next_e) = incident[end].iter().find(|&&e| !used[e]) else { break };
                let next = tri.topo.edge(next_e).other(end);
                let (nlo, nhi) = (lo.min(h[next]), hi.max(h[next]));
                if nhi > opts.kappa_h * nlo {
                    break;
                }
                used[next_e] = true;
                (lo, hi) = (nlo, nhi);
                if forward {
                    edges.push_back(next_e);
                    nodes.push_back(next);
                } else {
                    edges.push_front(next_e);
                    nodes.push_front(next);
                }
                if next == if forward { *nodes.front().unwrap() } else { *nodes.back().unwrap() } {
                    closed = true;
                    break;
                }
            }
            if closed {
                break;
            }
        }
        let nodes: Vec<usize> = nodes.into();
        let (eta, xi) = frame(tri, &nodes);
        let first = nodes[0];
        let last = *nodes.last().unwrap();
        paths.push(AnisoPath {
            boundary_ends: [tri.mesh.is_boundary(first), tri.mesh.is_boundary(last)],
            edges: edges.into(),
            nodes,
            closed,
            scale: (lo * hi).sqrt(),
            eta,
            xi,
        });
    }
    paths
}

/// Principal direction of the node cloud and its clockwise normal.
fn frame(tri: &Triangulation, nodes: &[usize]) -> ([f64; 2], [f64; 2]) {
    let pts: Vec<[f64; 2]> = nodes.iter().map(|&z| tri.mesh.nodes()[z]).collect();
    let k = pts.len() as f64;
    let cx = pts.iter().map(|p| p[0]).sum::<f64>() / k;
    let cy = pts.iter().map(|p| p[1]).sum::<f64>() / k;
    let (mut sxx, mut sxy, mut syy) = (0.0, 0.0, 0.0);
    for p in &pts {
        let (dx, dy) = (p[0] - cx, p[1] - cy);
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    // angle of the major axis of the 2x2 covariance
    let theta = 0.5 * (2.0 * sxy).atan2(sxx - syy);
    let mut eta = [theta.cos(), theta.sin()];
    let (a, b) = (pts[0], pts[pts.len() - 1]);
    if (b[0] - a[0]) * eta[0] + (b[1] - a[1]) * eta[1] < 0.0 {
        eta = [-eta[0], -eta[1]];
    }
    (eta, [eta[1], -eta[0]])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::estimator::classify::{classify_nodes, ClassifyOptions};
    use crate::estimator::estimate::short_edges;
    use crate::mesh::{rectangle_mesh, Diagonal};

    fn paths(nx: usize, ny: usize) -> (Triangulation, Vec<AnisoPath>) {
        let t = Triangulation::new(rectangle_mesh(nx, ny, 1.0, 1.0, Diagonal::default()).unwrap()).unwrap();
        let c = classify_nodes(&t, &ClassifyOptions::default());
        let p = extract_paths(&t, &c, &short_edges(&t, 0.5), &PathOptions::default());
        (t, p)
    }

    #[test]
    fn one_path_per_interior_grid_line() {
        let (n, m) = (20, 40);
        let (t, ps) = paths(n, m);
        assert_eq!(ps.len(), n - 1);
        let s = t.mesh.structured().unwrap();
        let mut columns: Vec<usize> = ps
            .iter()
            .map(|p| {
                assert_eq!(p.interior_nodes().len(), m - 1);
                assert!(!p.closed && p.boundary_ends == [true, true]);
                assert!((p.eta[0].abs()) < 1e-12 && (p.xi[0] - 1.0).abs() < 1e-12);
                let i = s.node_ij(p.nodes[0]).0;
                assert!(p.nodes.iter().all(|&z| s.node_ij(z).0 == i));
                i
            })
            .collect();
        columns.sort_unstable();
        assert_eq!(columns, (1..n).collect::<Vec<_>>());
    }

    #[test]
    fn square_cells_give_no_paths() {
        assert!(paths(10, 10).1.is_empty());
    }

    #[test]
    fn frame_of_diagonal_line() {
        let t = Triangulation::new(rectangle_mesh(4, 4, 1.0, 1.0, Diagonal::default()).unwrap()).unwrap();
        let s = t.mesh.structured().unwrap();
        let nodes: Vec<usize> = (0..=4).map(|i| s.node(i, i)).collect();
        let (eta, xi) = frame(&t, &nodes);
        let r = 0.5f64.sqrt();
        assert!((eta[0] - r).abs() < 1e-12 && (eta[1] - r).abs() < 1e-12);
        assert!((xi[0] - r).abs() < 1e-12 && (xi[1] + r).abs() < 1e-12);
    }
}
