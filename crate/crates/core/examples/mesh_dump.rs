//! Writes a tensor mesh to a text file and reads it back.
//!
//! cargo run --example mesh_dump -- <nx> <ny> <height> <file>

use std::path::PathBuf;

use anisofem::mesh::io::{read_mesh, write_mesh};
use anisofem::mesh::{build_tensor_mesh, Diagonal, Grid1D};
use anyhow::Context;

fn main() -> anyhow::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let nx: usize = args.first().map_or(Ok(4), |a| a.parse())?;
    let ny: usize = args.get(1).map_or(Ok(8), |a| a.parse())?;
    let eps: f64 = args.get(2).map_or(Ok(1.0), |a| a.parse())?;
    let path = args.get(3).map_or_else(|| std::env::temp_dir().join("mesh.txt"), PathBuf::from);

    let mesh = build_tensor_mesh(&Grid1D::uniform(nx, 1.0)?, &Grid1D::uniform(ny, eps)?, Diagonal::default());
    write_mesh(&mesh, &path).with_context(|| format!("writing {}", path.display()))?;
    let back = read_mesh(&path)?;
    assert_eq!(back.nodes(), mesh.nodes());
    println!("{}: {} nodes, {} triangles", path.display(), back.num_nodes(), back.num_triangles());
    Ok(())
}
