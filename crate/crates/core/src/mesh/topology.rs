use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::mesh::tensor::Mesh;

/// An edge oriented from the lower to the higher node index.
///
/// `left` is the triangle on the left of `a -> b`, `right` the one on its
/// right. Boundary edges have exactly one of the two.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub left: Option<usize>,
    pub right: Option<usize>,
}

impl Edge {
    pub fn is_interior(&self) -> bool {
        self.left.is_some() && self.right.is_some()
    }

    pub fn triangles(&self) -> impl Iterator<Item = usize> {
        self.left.into_iter().chain(self.right)
    }

    /// The endpoint that is not `z`.
    pub fn other(&self, z: usize) -> usize {
        if self.a == z {
            self.b
        } else {
            self.a
        }
    }
}

/// Anticlockwise fan of edges and triangles around one node.
///
/// For a closed fan `triangles[k]` lies between `edges[k]` and
/// `edges[(k + 1) % len]`; for an open fan `edges` has one more entry than
/// `triangles` and both ends are boundary edges.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NodeStar {
    pub edges: Vec<usize>,
    pub triangles: Vec<usize>,
    pub closed: bool,
}

#[derive(Debug, Clone)]
pub struct Topology {
    edges: Vec<Edge>,
    triangle_edges: Vec<[usize; 3]>,
    stars: Vec<NodeStar>,
}

impl Topology {
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    /// Edge `k` of triangle `t` joins its local vertices `k` and `k + 1`.
    pub fn triangle_edges(&self, t: usize) -> [usize; 3] {
        self.triangle_edges[t]
    }

    pub fn star(&self, z: usize) -> &NodeStar {
        &self.stars[z]
    }

    pub fn stars(&self) -> &[NodeStar] {
        &self.stars
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn interior_edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().enumerate().filter(|(_, e)| e.is_interior()).map(|(i, _)| i)
    }

    /// Largest number of triangles around any node.
    pub fn max_fan_size(&self) -> usize {
        self.stars.iter().map(|s| s.triangles.len()).max().unwrap_or(0)
    }

    /// Edge joining `a` and `b`, if any.
    pub fn find_edge(&self, a: usize, b: usize) -> Option<usize> {
        self.stars[a].edges.iter().copied().find(|&e| self.edges[e].other(a) == b)
    }
}

pub fn compute_topology(mesh: &Mesh) -> Result<Topology> {
    let nt = mesh.num_triangles();
    let nodes = mesh.nodes();

    // (lo, hi, triangle, local edge index)
    let mut half: Vec<(usize, usize, usize, u8)> = Vec::with_capacity(3 * nt);
    for (t, tri) in mesh.triangles().iter().enumerate() {
        for k in 0..3 {
            let (p, q) = (tri[k], tri[(k + 1) % 3]);
            half.push((p.min(q), p.max(q), t, k as u8));
        }
    }
    half.sort_unstable();

    let mut edges = Vec::with_capacity(half.len() / 2 + nodes.len());
    let mut triangle_edges = vec![[usize::MAX; 3]; nt];
    let mut start = 0;
    while start < half.len() {
        let (a, b) = (half[start].0, half[start].1);
        let mut end = start;
        while end < half.len() && half[end].0 == a && half[end].1 == b {
            end += 1;
        }
        if end - start > 2 {
            return Err(Error::Topology(format!(
                "edge ({a}, {b}) is shared by {} triangles",
                end - start
            )));
        }
        let e = edges.len();
        let mut edge = Edge { a, b, left: None, right: None };
        for &(_, _, t, k) in &half[start..end] {
            triangle_edges[t][k as usize] = e;
            // Triangles are counterclockwise, so each lies left of its own
            // directed edges.
            let from = mesh.triangles()[t][k as usize];
            let slot = if from == a { &mut edge.left } else { &mut edge.right };
            if slot.is_some() {
                return Err(Error::Topology(format!(
                    "triangles on edge ({a}, {b}) have inconsistent orientation"
                )));
            }
            *slot = Some(t);
        }
        edges.push(edge);
        start = end;
    }

    // node -> incident triangles
    let mut offsets = vec![0usize; nodes.len() + 1];
    for tri in mesh.triangles() {
        for &v in tri {
            offsets[v + 1] += 1;
        }
    }
    for z in 0..nodes.len() {
        offsets[z + 1] += offsets[z];
    }
    let mut fill = offsets.clone();
    let mut incident = vec![0usize; offsets[nodes.len()]];
    for (t, tri) in mesh.triangles().iter().enumerate() {
        for &v in tri {
            incident[fill[v]] = t;
            fill[v] += 1;
        }
    }

    let mut stars = Vec::with_capacity(nodes.len());
    for z in 0..nodes.len() {
        let tris = &incident[offsets[z]..offsets[z + 1]];
        stars.push(build_star(mesh, &triangle_edges, &edges, z, tris)?);
    }

    Ok(Topology { edges, triangle_edges, stars })
}

fn build_star(
    mesh: &Mesh,
    triangle_edges: &[[usize; 3]],
    edges: &[Edge],
    z: usize,
    tris: &[usize],
) -> Result<NodeStar> {
    if tris.is_empty() {
        return Ok(NodeStar::default());
    }
    // Each triangle spans anticlockwise from edge (z, next) to edge (z, prev).
    let spans: Vec<(usize, usize, usize)> = tris
        .iter()
        .map(|&t| {
            let tri = mesh.triangles()[t];
            let k = tri.iter().position(|&v| v == z).unwrap();
            let te = triangle_edges[t];
            (te[k], t, te[(k + 2) % 3])
        })
        .collect();

    let opening = spans
        .iter()
        .map(|s| s.0)
        .filter(|e| !spans.iter().any(|s| s.2 == *e))
        .collect::<Vec<_>>();
    let closed = opening.is_empty();
    if opening.len() > 1 {
        return Err(Error::Topology(format!("node {z} has a non-manifold fan")));
    }
    let first = if closed {
        let p = mesh.nodes()[z];
        let angle = |e: usize| {
            let q = mesh.nodes()[edges[e].other(z)];
            (q[1] - p[1]).atan2(q[0] - p[0]).rem_euclid(TAU)
        };
        spans
            .iter()
            .map(|s| s.0)
            .min_by(|&e1, &e2| angle(e1).total_cmp(&angle(e2)).then(e1.cmp(&e2)))
            .unwrap()
    } else {
        opening[0]
    };

    let mut star = NodeStar { edges: vec![first], triangles: Vec::with_capacity(spans.len()), closed };
    let mut current = first;
    while let Some(&(_, t, next)) = spans.iter().find(|s| s.0 == current) {
        star.triangles.push(t);
        if closed && next == first {
            break;
        }
        star.edges.push(next);
        current = next;
        if star.triangles.len() > spans.len() {
            return Err(Error::Topology(format!("node {z}: fan walk does not terminate")));
        }
    }
    if star.triangles.len() != spans.len() {
        return Err(Error::Topology(format!(
            "node {z}: fan covers {} of {} incident triangles",
            star.triangles.len(),
            spans.len()
        )));
    }
    Ok(star)
}
