use crate::error::{Error, Result};
use crate::fem::element::{local_mass, local_stiffness};
use crate::fem::field::DiscreteField;
use crate::linsolve::SparseSym;
use crate::mesh::{signed_area, Mesh};

/// Full (unreduced) P1 stiffness matrix over all mesh nodes.
pub fn assemble_stiffness(mesh: &Mesh) -> Result<SparseSym> {
    let mut entries = Vec::with_capacity(9 * mesh.num_triangles());
    for (t, tri) in mesh.triangles().iter().enumerate() {
        let p = mesh.vertices(t);
        let area = signed_area(p[0], p[1], p[2]);
        if !(area > 0.0) {
            return Err(Error::DegenerateTriangle { triangle: t, area });
        }
        let k = local_stiffness(p);
        for i in 0..3 {
            for j in 0..3 {
                entries.push((tri[i], tri[j], k[i][j]));
            }
        }
    }
    SparseSym::from_triplets(mesh.num_nodes(), &entries)
}

/// `<f^I, phi_z>` for every node, integrated exactly with the P1 mass matrix.
pub fn assemble_load(mesh: &Mesh, f_interp: &DiscreteField) -> Vec<f64> {
    assert_eq!(f_interp.len(), mesh.num_nodes(), "field does not match mesh");
    let mut load = vec![0.0; mesh.num_nodes()];
    for (t, &tri) in mesh.triangles().iter().enumerate() {
        let p = mesh.vertices(t);
        let mass = local_mass(signed_area(p[0], p[1], p[2]));
        let f = f_interp.on_triangle(tri);
        for i in 0..3 {
            load[tri[i]] += mass[i][0] * f[0] + mass[i][1] * f[1] + mass[i][2] * f[2];
        }
    }
    load
}

/// Stiffness system reduced to the free (non-Dirichlet) nodes, with the
/// Dirichlet lift moved to the right-hand side.
#[derive(Debug, Clone)]
pub struct LinearSystem {
    pub matrix: SparseSym,
    pub rhs: Vec<f64>,
    /// Global node index of each free unknown.
    pub free: Vec<usize>,
    /// Full-length vector holding the Dirichlet values (zero on free nodes).
    pub lift: Vec<f64>,
}

impl LinearSystem {
    pub fn new(stiffness: &SparseSym, load: &[f64], dirichlet: &[bool], lift: &DiscreteField) -> Result<Self> {
        let n = stiffness.n();
        if load.len() != n || dirichlet.len() != n || lift.len() != n {
            return Err(Error::InvalidParameter("system parts have inconsistent sizes".into()));
        }
        let mut local = vec![usize::MAX; n];
        let mut free = Vec::new();
        for z in 0..n {
            if !dirichlet[z] {
                local[z] = free.len();
                free.push(z);
            }
        }
        let lift: Vec<f64> = (0..n).map(|z| if dirichlet[z] { lift.values()[z] } else { 0.0 }).collect();

        let mut entries = Vec::with_capacity(stiffness.nnz());
        let mut rhs = Vec::with_capacity(free.len());
        for (i, &z) in free.iter().enumerate() {
            let mut b = load[z];
            for (w, v) in stiffness.row(z) {
                if dirichlet[w] {
                    b -= v * lift[w];
                } else {
                    entries.push((i, local[w], v));
                }
            }
            rhs.push(b);
        }
        let matrix = SparseSym::from_triplets(free.len(), &entries)?;
        Ok(Self { matrix, rhs, free, lift })
    }

    /// Combines free-node values with the lift into a full nodal field.
    pub fn expand(&self, x: &[f64]) -> DiscreteField {
        let mut values = self.lift.clone();
        for (&z, &v) in self.free.iter().zip(x) {
            values[z] = v;
        }
        DiscreteField::new(values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fem::field::nodal_interpolant;
    use crate::mesh::{rectangle_mesh, Diagonal};

    fn center_square() -> Mesh {
        let nodes = vec![[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0], [0.5, 0.5]];
        let tris = vec![[0, 1, 4], [1, 2, 4], [2, 3, 4], [3, 0, 4]];
        Mesh::with_derived_boundary(nodes, tris).unwrap()
    }

    #[test]
    fn center_node_diagonal_is_four() {
        let a = assemble_stiffness(&center_square()).unwrap();
        assert!((a.get(4, 4) - 4.0).abs() < 1e-14);
        assert!((a.get(4, 0) + 1.0).abs() < 1e-14);
    }

    #[test]
    fn global_rows_sum_to_zero_and_symmetric() {
        let m = rectangle_mesh(5, 9, 1.0, 0.1, Diagonal::default()).unwrap();
        let a = assemble_stiffness(&m).unwrap();
        assert!(a.is_symmetric(1e-14));
        let max_diag = a.diagonal().into_iter().fold(0.0, f64::max);
        for i in 0..a.n() {
            assert!(a.row(i).map(|(_, v)| v).sum::<f64>().abs() < 1e-12 * max_diag);
        }
    }

    #[test]
    fn unit_load_gives_third_of_star_area() {
        let m = rectangle_mesh(4, 6, 1.0, 0.5, Diagonal::default()).unwrap();
        let load = assemble_load(&m, &nodal_interpolant(|_, _| 1.0, &m));
        let mut star = vec![0.0; m.num_nodes()];
        for t in 0..m.num_triangles() {
            let p = m.vertices(t);
            for &v in &m.triangles()[t] {
                star[v] += signed_area(p[0], p[1], p[2]);
            }
        }
        for (l, s) in load.iter().zip(&star) {
            assert!((l - s / 3.0).abs() < 1e-15);
        }
        assert!((load.iter().sum::<f64>() - 0.5).abs() < 1e-14);
        let zero = assemble_load(&m, &DiscreteField::zeros(m.num_nodes()));
        assert!(zero.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn hat_load_on_single_triangle() {
        let m = Mesh::new(vec![[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]], vec![[0, 1, 2]], vec![true; 3]).unwrap();
        let load = assemble_load(&m, &DiscreteField::new(vec![1.0, 0.0, 0.0]));
        let area = 0.5;
        assert!((load[0] - area / 6.0).abs() < 1e-16);
        assert!((load[1] - area / 12.0).abs() < 1e-16);
        assert!((load[2] - area / 12.0).abs() < 1e-16);
    }

    #[test]
    fn reduced_system_moves_lift_to_rhs() {
        let m = center_square();
        let a = assemble_stiffness(&m).unwrap();
        let lift = nodal_interpolant(|x, _| x, &m);
        let sys = LinearSystem::new(&a, &[0.0; 5], m.boundary(), &lift).unwrap();
        assert_eq!(sys.free, vec![4]);
        // 4 u_c = sum of corner values = 0 + 1 + 1 + 0
        assert!((sys.rhs[0] - 2.0).abs() < 1e-14);
        let u = sys.expand(&[0.5]);
        assert_eq!(u.values(), &[0.0, 1.0, 1.0, 0.0, 0.5]);
    }
}
