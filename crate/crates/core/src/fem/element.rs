use crate::mesh::{signed_area, Point};

/// Gradients of the three barycentric coordinates (constant on `T`).
pub fn barycentric_gradients(p: [Point; 3]) -> [[f64; 2]; 3] {
    let two_area = 2.0 * signed_area(p[0], p[1], p[2]);
    let mut g = [[0.0; 2]; 3];
    for k in 0..3 {
        let (a, b) = (p[(k + 1) % 3], p[(k + 2) % 3]);
        g[k] = [(a[1] - b[1]) / two_area, (b[0] - a[0]) / two_area];
    }
    g
}

/// `K_ij = |T| grad(l_i) . grad(l_j)`
pub fn local_stiffness(p: [Point; 3]) -> [[f64; 3]; 3] {
    let area = signed_area(p[0], p[1], p[2]);
    let g = barycentric_gradients(p);
    let mut k = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            k[i][j] = area * (g[i][0] * g[j][0] + g[i][1] * g[j][1]);
        }
    }
    k
}

/// P1 mass matrix `|T|/12 [[2,1,1],[1,2,1],[1,1,2]]`.
pub fn local_mass(area: f64) -> [[f64; 3]; 3] {
    let (d, o) = (area / 6.0, area / 12.0);
    [[d, o, o], [o, d, o], [o, o, d]]
}

/// Gradient on `T` of the linear function with the given vertex values.
pub fn linear_gradient(p: [Point; 3], values: [f64; 3]) -> [f64; 2] {
    let g = barycentric_gradients(p);
    let mut out = [0.0; 2];
    for k in 0..3 {
        out[0] += values[k] * g[k][0];
        out[1] += values[k] * g[k][1];
    }
    out
}

/// `int_T v^2` for the linear `v` with the given vertex values.
pub fn linear_l2_sq(area: f64, v: [f64; 3]) -> f64 {
    let s = v[0] + v[1] + v[2];
    area / 12.0 * (v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + s * s)
}
