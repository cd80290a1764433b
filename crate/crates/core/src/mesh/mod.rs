//! Structured anisotropic triangulations, edge/patch topology and the
//! geometric quantities the estimators are built from.

mod geometry;
mod grid;
pub mod io;
mod tensor;
mod topology;

pub use geometry::{geometry, GeomTables};
pub(crate) use geometry::{dist, point_set_diameter};
pub use grid::Grid1D;
pub use tensor::{build_tensor_mesh, rectangle_mesh, Diagonal, Mesh, Point, Structured};
pub(crate) use tensor::signed_area;
pub use topology::{compute_topology, Edge, NodeStar, Topology};

use crate::error::Result;

/// A mesh together with its topology and geometry tables.
#[derive(Debug, Clone)]
pub struct Triangulation {
    pub mesh: Mesh,
    pub topo: Topology,
    pub geom: GeomTables,
}

impl Triangulation {
    pub fn new(mesh: Mesh) -> Result<Self> {
        let topo = compute_topology(&mesh)?;
        let geom = geometry(&mesh, &topo)?;
        Ok(Self { mesh, topo, geom })
    }
}
