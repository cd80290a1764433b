use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::mesh::grid::Grid1D;

pub type Point = [f64; 2];

/// Which diagonal splits each rectangular cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Diagonal {
    /// From the lower-left to the upper-right corner.
    #[default]
    SouthWestNorthEast,
    /// From the lower-right to the upper-left corner.
    SouthEastNorthWest,
}

/// Provenance of a mesh built from a tensor product of two grids.
///
/// Node `(i, j)` has index `i * (ny + 1) + j`; cell `(i, j)` owns triangles
/// `2 * (i * ny + j)` and `2 * (i * ny + j) + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Structured {
    pub xs: Grid1D,
    pub ys: Grid1D,
    pub diagonal: Diagonal,
}

impl Structured {
    pub fn nx(&self) -> usize {
        self.xs.cells()
    }

    pub fn ny(&self) -> usize {
        self.ys.cells()
    }

    pub fn node(&self, i: usize, j: usize) -> usize {
        i * (self.ny() + 1) + j
    }

    pub fn node_ij(&self, z: usize) -> (usize, usize) {
        (z / (self.ny() + 1), z % (self.ny() + 1))
    }

    pub fn triangle_cell(&self, t: usize) -> (usize, usize) {
        let c = t / 2;
        (c / self.ny(), c % self.ny())
    }
}

/// A conforming triangulation with counterclockwise triangles.
#[derive(Debug, Clone)]
pub struct Mesh {
    nodes: Vec<Point>,
    triangles: Vec<[usize; 3]>,
    boundary: Vec<bool>,
    structured: Option<Structured>,
}

pub(crate) fn signed_area(p: Point, q: Point, r: Point) -> f64 {
    0.5 * ((q[0] - p[0]) * (r[1] - p[1]) - (r[0] - p[0]) * (q[1] - p[1]))
}

impl Mesh {
    /// Builds a mesh from raw parts, checking indices and orientation.
    pub fn new(nodes: Vec<Point>, triangles: Vec<[usize; 3]>, boundary: Vec<bool>) -> Result<Self> {
        if boundary.len() != nodes.len() {
            return Err(Error::InvalidParameter(format!(
                "{} boundary flags for {} nodes",
                boundary.len(),
                nodes.len()
            )));
        }
        for (t, tri) in triangles.iter().enumerate() {
            if let Some(&v) = tri.iter().find(|&&v| v >= nodes.len()) {
                return Err(Error::InvalidParameter(format!(
                    "triangle {t} references node {v} of {}",
                    nodes.len()
                )));
            }
            if tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2] {
                return Err(Error::InvalidParameter(format!("triangle {t} repeats a vertex")));
            }
            let area = signed_area(nodes[tri[0]], nodes[tri[1]], nodes[tri[2]]);
            if !(area > 0.0) {
                return Err(Error::DegenerateTriangle { triangle: t, area });
            }
        }
        Ok(Self { nodes, triangles, boundary, structured: None })
    }

    /// Like [`Mesh::new`], flagging as boundary every node on an edge with one triangle.
    pub fn with_derived_boundary(nodes: Vec<Point>, triangles: Vec<[usize; 3]>) -> Result<Self> {
        let mut count: HashMap<(usize, usize), u32> = HashMap::new();
        for tri in &triangles {
            for k in 0..3 {
                let (a, b) = (tri[k], tri[(k + 1) % 3]);
                *count.entry((a.min(b), a.max(b))).or_default() += 1;
            }
        }
        let mut boundary = vec![false; nodes.len()];
        for (&(a, b), &c) in &count {
            if c == 1 {
                boundary[a] = true;
                boundary[b] = true;
            }
        }
        Self::new(nodes, triangles, boundary)
    }

    pub fn nodes(&self) -> &[Point] {
        &self.nodes
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn boundary(&self) -> &[bool] {
        &self.boundary
    }

    pub fn is_boundary(&self, z: usize) -> bool {
        self.boundary[z]
    }

    pub fn num_nodes(&self) -> usize {
        self.nodes.len()
    }

    pub fn num_triangles(&self) -> usize {
        self.triangles.len()
    }

    pub fn structured(&self) -> Option<&Structured> {
        self.structured.as_ref()
    }

    pub fn vertices(&self, t: usize) -> [Point; 3] {
        let [a, b, c] = self.triangles[t];
        [self.nodes[a], self.nodes[b], self.nodes[c]]
    }

    pub fn centroid(&self, t: usize) -> Point {
        let [p, q, r] = self.vertices(t);
        [(p[0] + q[0] + r[0]) / 3.0, (p[1] + q[1] + r[1]) / 3.0]
    }

    /// Axis-aligned bounding box `[xmin, xmax, ymin, ymax]`.
    pub fn bounding_box(&self) -> [f64; 4] {
        self.nodes.iter().fold(
            [f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY],
            |b, p| [b[0].min(p[0]), b[1].max(p[0]), b[2].min(p[1]), b[3].max(p[1])],
        )
    }
}

/// Splits every cell of `xs x ys` along the same diagonal.
pub fn build_tensor_mesh(xs: &Grid1D, ys: &Grid1D, diagonal: Diagonal) -> Mesh {
    let (nx, ny) = (xs.cells(), ys.cells());
    let mut nodes = Vec::with_capacity((nx + 1) * (ny + 1));
    let mut boundary = Vec::with_capacity(nodes.capacity());
    for (i, &x) in xs.points().iter().enumerate() {
        for (j, &y) in ys.points().iter().enumerate() {
            nodes.push([x, y]);
            boundary.push(i == 0 || i == nx || j == 0 || j == ny);
        }
    }
    let id = |i: usize, j: usize| i * (ny + 1) + j;
    let mut triangles = Vec::with_capacity(2 * nx * ny);
    for i in 0..nx {
        for j in 0..ny {
            let (sw, se, ne, nw) = (id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1));
            match diagonal {
                Diagonal::SouthWestNorthEast => {
                    triangles.push([sw, se, ne]);
                    triangles.push([sw, ne, nw]);
                }
                Diagonal::SouthEastNorthWest => {
                    triangles.push([sw, se, nw]);
                    triangles.push([se, ne, nw]);
                }
            }
        }
    }
    Mesh {
        nodes,
        triangles,
        boundary,
        structured: Some(Structured { xs: xs.clone(), ys: ys.clone(), diagonal }),
    }
}

/// Uniform `nx x ny` tensor mesh of the rectangle `(0, lx) x (0, ly)`.
pub fn rectangle_mesh(nx: usize, ny: usize, lx: f64, ly: f64, diagonal: Diagonal) -> Result<Mesh> {
    Ok(build_tensor_mesh(&Grid1D::uniform(nx, lx)?, &Grid1D::uniform(ny, ly)?, diagonal))
}
