//! Plain-text mesh dump.
//!
//! ```text
//! nodes <n>
//! <id> <x> <y> <boundary:0|1>
//! triangles <m>
//! <id> <v0> <v1> <v2>
//! ```
//!
//! Coordinates carry 17 significant digits so that a dump re-reads to the
//! same binary values.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::mesh::tensor::Mesh;

pub fn write_mesh_string(mesh: &Mesh) -> String {
    let mut out = String::with_capacity(48 * mesh.num_nodes() + 32 * mesh.num_triangles());
    writeln!(out, "nodes {}", mesh.num_nodes()).unwrap();
    for (z, p) in mesh.nodes().iter().enumerate() {
        writeln!(out, "{z} {:.16e} {:.16e} {}", p[0], p[1], u8::from(mesh.is_boundary(z))).unwrap();
    }
    writeln!(out, "triangles {}", mesh.num_triangles()).unwrap();
    for (t, [a, b, c]) in mesh.triangles().iter().enumerate() {
        writeln!(out, "{t} {a} {b} {c}").unwrap();
    }
    out
}

pub fn write_mesh(mesh: &Mesh, path: &Path) -> Result<()> {
    std::fs::write(path, write_mesh_string(mesh))?;
    Ok(())
}

pub fn read_mesh(path: &Path) -> Result<Mesh> {
    parse_mesh(&std::fs::read_to_string(path)?, path)
}

pub fn parse_mesh(text: &str, origin: &Path) -> Result<Mesh> {
    let err = |line: usize, msg: String| Error::Parse { path: origin.to_path_buf(), line, msg };
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());

    let header = |lines: &mut dyn Iterator<Item = (usize, &str)>, name: &str| -> Result<usize> {
        let (no, line) = lines.next().ok_or_else(|| err(0, format!("missing `{name}` header")))?;
        let mut it = line.split_whitespace();
        match (it.next(), it.next().map(str::parse::<usize>), it.next()) {
            (Some(tag), Some(Ok(n)), None) if tag == name => Ok(n),
            _ => Err(err(no, format!("expected `{name} <count>`, found `{line}`"))),
        }
    };

    let n = header(&mut lines, "nodes")?;
    let mut nodes = Vec::with_capacity(n);
    let mut boundary = Vec::with_capacity(n);
    for id in 0..n {
        let (no, line) = lines.next().ok_or_else(|| err(0, format!("expected {n} nodes, found {id}")))?;
        let f: Vec<&str> = line.split_whitespace().collect();
        if f.len() != 4 || f[0].parse::<usize>().ok() != Some(id) {
            return Err(err(no, format!("expected `{id} <x> <y> <0|1>`")));
        }
        let x = f[1].parse::<f64>().map_err(|e| err(no, e.to_string()))?;
        let y = f[2].parse::<f64>().map_err(|e| err(no, e.to_string()))?;
        let b = match f[3] {
            "0" => false,
            "1" => true,
            other => return Err(err(no, format!("boundary flag must be 0 or 1, got `{other}`"))),
        };
        nodes.push([x, y]);
        boundary.push(b);
    }

    let m = header(&mut lines, "triangles")?;
    let mut triangles = Vec::with_capacity(m);
    for id in 0..m {
        let (no, line) = lines.next().ok_or_else(|| err(0, format!("expected {m} triangles, found {id}")))?;
        let f: Vec<usize> = line
            .split_whitespace()
            .map(str::parse)
            .collect::<std::result::Result<_, _>>()
            .map_err(|e: std::num::ParseIntError| err(no, e.to_string()))?;
        if f.len() != 4 || f[0] != id {
            return Err(err(no, format!("expected `{id} <v0> <v1> <v2>`")));
        }
        triangles.push([f[1], f[2], f[3]]);
    }
    if let Some((no, line)) = lines.next() {
        return Err(err(no, format!("trailing content `{line}`")));
    }
    Mesh::new(nodes, triangles, boundary)
}
