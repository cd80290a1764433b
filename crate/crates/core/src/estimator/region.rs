use crate::mesh::Triangulation;

/// A subdomain given by a set of elements. An interior edge belongs to the
/// region when every triangle sharing it does.
#[derive(Debug, Clone, PartialEq)]
pub struct Region {
    pub label: String,
    pub elements: Vec<bool>,
    pub edges: Vec<bool>,
}

impl Region {
    pub fn whole(tri: &Triangulation) -> Self {
        Self::from_elements(tri, "omega", vec![true; tri.mesh.num_triangles()])
    }

    pub fn from_elements(tri: &Triangulation, label: impl Into<String>, elements: Vec<bool>) -> Self {
        assert_eq!(elements.len(), tri.mesh.num_triangles(), "element mask does not match mesh");
        let edges = tri
            .topo
            .edges()
            .iter()
            .map(|e| e.is_interior() && e.triangles().all(|t| elements[t]))
            .collect();
        Self { label: label.into(), elements, edges }
    }

    /// Elements whose centroid satisfies `inside`.
    pub fn from_centroids(tri: &Triangulation, label: impl Into<String>, inside: impl Fn([f64; 2]) -> bool) -> Self {
        let elements = (0..tri.mesh.num_triangles()).map(|t| inside(tri.mesh.centroid(t))).collect();
        Self::from_elements(tri, label, elements)
    }

    pub fn is_empty(&self) -> bool {
        !self.elements.iter().any(|&b| b)
    }
}
