use crate::mesh::{dist, point_set_diameter, Point, Triangulation};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassifyOptions {
    /// A node is anisotropic when `h_z < c0 * H_z`.
    pub c0: f64,
    /// Lower bound for `min |T| / |omega_z|`; `None` means
    /// `1 / (2 * largest fan size)`.
    pub c_uni: Option<f64>,
    /// A node is regular when every angle in its patch is at least this many degrees.
    pub min_angle_deg: f64,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self { c0: 1.0 / 3.0, c_uni: None, min_angle_deg: 20.0 }
    }
}

/// Per-node classification.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeClasses {
    pub anisotropic: Vec<bool>,
    pub regular: Vec<bool>,
    /// `h_z / H_z`, with boundary patches completed by reflection where the
    /// boundary is straight or a right-angle corner.
    pub aspect: Vec<f64>,
    /// `min_{T in omega_z} |T| / |omega_z|`
    pub min_area_ratio: Vec<f64>,
    /// Smallest angle in `omega_z`, degrees.
    pub min_angle_deg: Vec<f64>,
    pub c_uni: f64,
}

impl NodeClasses {
    pub fn count_anisotropic(&self) -> usize {
        self.anisotropic.iter().filter(|&&b| b).count()
    }

    pub fn count_regular(&self) -> usize {
        self.regular.iter().filter(|&&b| b).count()
    }
}

fn min_angle_deg(p: [Point; 3]) -> f64 {
    let mut m = f64::INFINITY;
    for k in 0..3 {
        let (a, b, c) = (p[k], p[(k + 1) % 3], p[(k + 2) % 3]);
        let (u, v) = ([b[0] - a[0], b[1] - a[1]], [c[0] - a[0], c[1] - a[1]]);
        let cross = u[0] * v[1] - u[1] * v[0];
        let dot = u[0] * v[0] + u[1] * v[1];
        m = m.min(cross.abs().atan2(dot).to_degrees());
    }
    m
}

fn reflect(p: Point, origin: Point, dir: [f64; 2]) -> Point {
    let (dx, dy) = (p[0] - origin[0], p[1] - origin[1]);
    let t = dx * dir[0] + dy * dir[1];
    [origin[0] + 2.0 * t * dir[0] - dx, origin[1] + 2.0 * t * dir[1] - dy]
}

/// Area and diameter of the patch of a boundary node mirrored across the
/// boundary: doubled on a straight boundary, quadrupled at a right-angle
/// corner. Other corners are left as they are.
fn completed_patch(tri: &Triangulation, z: usize, verts: &[Point]) -> (f64, f64) {
    let star = tri.topo.star(z);
    let area = tri.geom.star_area[z];
    let p = tri.mesh.nodes()[z];
    let unit = |e: usize| {
        let q = tri.mesh.nodes()[tri.topo.edge(e).other(z)];
        let d = dist(p, q);
        [(q[0] - p[0]) / d, (q[1] - p[1]) / d]
    };
    let (d1, d2) = (unit(star.edges[0]), unit(*star.edges.last().unwrap()));
    let cross = d1[0] * d2[1] - d1[1] * d2[0];
    let dot = d1[0] * d2[0] + d1[1] * d2[1];
    const TOL: f64 = 1e-9;
    if cross.abs() < TOL && dot < 0.0 {
        let mut all = verts.to_vec();
        all.extend(verts.iter().map(|&q| reflect(q, p, d1)));
        (2.0 * area, point_set_diameter(&all))
    } else if dot.abs() < TOL {
        let mut all = verts.to_vec();
        all.extend(verts.iter().map(|&q| reflect(q, p, d1)));
        all.extend(verts.iter().map(|&q| reflect(q, p, d2)));
        all.extend(verts.iter().map(|&q| [2.0 * p[0] - q[0], 2.0 * p[1] - q[1]]));
        (4.0 * area, point_set_diameter(&all))
    } else {
        (area, tri.geom.star_diam[z])
    }
}

pub fn classify_nodes(tri: &Triangulation, opts: &ClassifyOptions) -> NodeClasses {
    let n = tri.mesh.num_nodes();
    let c_uni = opts.c_uni.unwrap_or(1.0 / (2.0 * tri.topo.max_fan_size().max(1) as f64));
    let mut out = NodeClasses {
        anisotropic: Vec::with_capacity(n),
        regular: Vec::with_capacity(n),
        aspect: Vec::with_capacity(n),
        min_area_ratio: Vec::with_capacity(n),
        min_angle_deg: Vec::with_capacity(n),
        c_uni,
    };
    let mut verts = Vec::new();
    for z in 0..n {
        let star = tri.topo.star(z);
        if star.triangles.is_empty() {
            out.anisotropic.push(false);
            out.regular.push(false);
            out.aspect.push(0.0);
            out.min_area_ratio.push(0.0);
            out.min_angle_deg.push(0.0);
            continue;
        }
        let area = tri.geom.star_area[z];
        let (full_area, full_diam) = if star.closed {
            (area, tri.geom.star_diam[z])
        } else {
            verts.clear();
            verts.push(tri.mesh.nodes()[z]);
            verts.extend(star.edges.iter().map(|&e| tri.mesh.nodes()[tri.topo.edge(e).other(z)]));
            completed_patch(tri, z, &verts)
        };
        // h_z / H_z = |omega_z| / H_z^2
        let aspect = full_area / (full_diam * full_diam);
        let min_t = star.triangles.iter().map(|&t| tri.geom.area[t]).fold(f64::INFINITY, f64::min);
        let angle = star.triangles.iter().map(|&t| min_angle_deg(tri.mesh.vertices(t))).fold(f64::INFINITY, f64::min);
        let ratio = min_t / area;
        out.anisotropic.push(aspect < opts.c0 && ratio >= c_uni);
        out.regular.push(angle >= opts.min_angle_deg);
        out.aspect.push(aspect);
        out.min_area_ratio.push(ratio);
        out.min_angle_deg.push(angle);
    }
    out
}
