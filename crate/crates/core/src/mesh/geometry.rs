use crate::error::{Error, Result};
use crate::mesh::tensor::{signed_area, Mesh, Point};
use crate::mesh::topology::Topology;

pub(crate) fn dist(p: Point, q: Point) -> f64 {
    (p[0] - q[0]).hypot(p[1] - q[1])
}

pub(crate) fn point_set_diameter(points: &[Point]) -> f64 {
    let mut d = 0.0f64;
    for (k, &p) in points.iter().enumerate() {
        for &q in &points[k + 1..] {
            d = d.max(dist(p, q));
        }
    }
    d
}

/// Geometric quantities of elements, edges and node patches.
#[derive(Debug, Clone)]
pub struct GeomTables {
    /// `|T|`
    pub area: Vec<f64>,
    /// `H_T`, the longest edge of `T`.
    pub diam: Vec<f64>,
    /// `h_T = 2|T| / H_T`, the smallest altitude of `T`.
    pub height: Vec<f64>,

    /// `|S|`
    pub edge_length: Vec<f64>,
    /// `|omega_S|`, the summed area of the triangles sharing `S`.
    pub patch_area: Vec<f64>,
    /// Largest element diameter in `omega_S`; this is the patch scale used
    /// by the bubble weight and by the short-edge test.
    pub patch_diam: Vec<f64>,
    /// Largest distance between two vertices of `omega_S`.
    pub patch_hull_diam: Vec<f64>,

    /// `|omega_z|`
    pub star_area: Vec<f64>,
    /// `H_z = diam(omega_z)`
    pub star_diam: Vec<f64>,
    /// `h_z = |omega_z| / H_z`
    pub star_height: Vec<f64>,
    /// Area of the axis-aligned bounding box of `omega_z` over `|omega_z|`.
    pub star_box_ratio: Vec<f64>,
}

impl GeomTables {
    pub fn min_area(&self) -> f64 {
        self.area.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

pub fn geometry(mesh: &Mesh, topo: &Topology) -> Result<GeomTables> {
    let nt = mesh.num_triangles();
    let mut area = Vec::with_capacity(nt);
    let mut diam = Vec::with_capacity(nt);
    let mut height = Vec::with_capacity(nt);
    for t in 0..nt {
        let [p, q, r] = mesh.vertices(t);
        let a = signed_area(p, q, r);
        if !(a > 0.0) {
            return Err(Error::DegenerateTriangle { triangle: t, area: a });
        }
        let h = dist(p, q).max(dist(q, r)).max(dist(r, p));
        area.push(a);
        diam.push(h);
        height.push(2.0 * a / h);
    }

    let ne = topo.num_edges();
    let mut edge_length = Vec::with_capacity(ne);
    let mut patch_area = Vec::with_capacity(ne);
    let mut patch_diam = Vec::with_capacity(ne);
    let mut patch_hull_diam = Vec::with_capacity(ne);
    let mut verts: Vec<Point> = Vec::with_capacity(6);
    for edge in topo.edges() {
        let (pa, pb) = (mesh.nodes()[edge.a], mesh.nodes()[edge.b]);
        edge_length.push(dist(pa, pb));
        patch_area.push(edge.triangles().map(|t| area[t]).sum());
        patch_diam.push(edge.triangles().map(|t| diam[t]).fold(0.0, f64::max));
        verts.clear();
        for t in edge.triangles() {
            verts.extend(mesh.vertices(t));
        }
        patch_hull_diam.push(point_set_diameter(&verts));
    }

    let nn = mesh.num_nodes();
    let mut star_area = Vec::with_capacity(nn);
    let mut star_diam = Vec::with_capacity(nn);
    let mut star_height = Vec::with_capacity(nn);
    let mut star_box_ratio = Vec::with_capacity(nn);
    for z in 0..nn {
        let star = topo.star(z);
        let a: f64 = star.triangles.iter().map(|&t| area[t]).sum();
        verts.clear();
        verts.push(mesh.nodes()[z]);
        verts.extend(star.edges.iter().map(|&e| mesh.nodes()[topo.edge(e).other(z)]));
        let h = point_set_diameter(&verts);
        let (mut x0, mut x1, mut y0, mut y1) =
            (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
        for p in &verts {
            x0 = x0.min(p[0]);
            x1 = x1.max(p[0]);
            y0 = y0.min(p[1]);
            y1 = y1.max(p[1]);
        }
        star_area.push(a);
        star_diam.push(h);
        star_height.push(if h > 0.0 { a / h } else { 0.0 });
        star_box_ratio.push(if a > 0.0 { (x1 - x0) * (y1 - y0) / a } else { 0.0 });
    }

    Ok(GeomTables {
        area,
        diam,
        height,
        edge_length,
        patch_area,
        patch_diam,
        patch_hull_diam,
        star_area,
        star_diam,
        star_height,
        star_box_ratio,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::tensor::{rectangle_mesh, Diagonal};
    use crate::mesh::topology::compute_topology;
    use approx::assert_relative_eq;

    fn tables(nx: usize, ny: usize, lx: f64, ly: f64) -> (Mesh, Topology, GeomTables) {
        let m = rectangle_mesh(nx, ny, lx, ly, Diagonal::default()).unwrap();
        let topo = compute_topology(&m).unwrap();
        let g = geometry(&m, &topo).unwrap();
        (m, topo, g)
    }

    #[test]
    fn unit_right_triangle() {
        let (_, _, g) = tables(1, 1, 1.0, 1.0);
        assert_relative_eq!(g.area[0], 0.5);
        assert_relative_eq!(g.diam[0], 2f64.sqrt());
        assert_relative_eq!(g.height[0], 2f64.sqrt() / 2.0, epsilon = 1e-15);
    }

    #[test]
    fn cell_diagonal_patch_area() {
        let (a, b) = (0.3, 0.05);
        let (_, topo, g) = tables(1, 1, a, b);
        let e = topo.interior_edges().next().unwrap();
        assert_relative_eq!(g.patch_area[e], a * b, epsilon = 1e-15);
        // both patch elements are the halves of the cell
        assert_relative_eq!(g.patch_diam[e], a.hypot(b));
        assert_relative_eq!(g.patch_hull_diam[e], a.hypot(b));
    }

    #[test]
    fn short_vertical_edge_on_anisotropic_cells() {
        let (n, m) = (20usize, 640usize);
        let (mesh, topo, g) = tables(n, m, 1.0, 1.0);
        let s = mesh.structured().unwrap();
        let e = topo.find_edge(s.node(5, 10), s.node(5, 11)).unwrap();
        let (h, k) = (1.0 / n as f64, 1.0 / m as f64);
        assert_relative_eq!(g.edge_length[e], k, epsilon = 1e-15);
        assert_relative_eq!(g.patch_diam[e], h.hypot(k), epsilon = 1e-14);
        // the two-element patch spans two cells horizontally
        assert_relative_eq!(g.patch_hull_diam[e], (2.0 * h).hypot(k), epsilon = 1e-14);
        assert!(g.patch_diam[e] > 30.0 * g.edge_length[e]);
    }

    #[test]
    fn invariants_hold() {
        let (mesh, topo, g) = tables(7, 13, 1.0, 0.125);
        let total: f64 = g.area.iter().sum();
        assert_relative_eq!(total, 0.125, max_relative = 1e-12);
        for t in 0..mesh.num_triangles() {
            assert!(g.height[t] <= g.diam[t]);
        }
        for (e, edge) in topo.edges().iter().enumerate() {
            let sum: f64 = edge.triangles().map(|t| g.area[t]).sum();
            assert_relative_eq!(g.patch_area[e], sum);
            assert!(g.patch_diam[e] >= g.edge_length[e]);
            assert!(g.patch_hull_diam[e] >= g.patch_diam[e]);
        }
        for z in 0..mesh.num_nodes() {
            assert!(g.star_height[z] <= g.star_diam[z]);
            assert!(g.star_box_ratio[z] >= 1.0 - 1e-12);
        }
    }

    #[test]
    fn interior_star_quantities() {
        let (h, k) = (0.1, 0.05);
        let (mesh, _, g) = tables(10, 20, 1.0, 1.0);
        let z = mesh.structured().unwrap().node(4, 7);
        assert_relative_eq!(g.star_area[z], 3.0 * h * k, epsilon = 1e-15);
        assert_relative_eq!(g.star_diam[z], 2.0 * h.hypot(k), epsilon = 1e-14);
    }
}
