/// Quadrature rule on a triangle in barycentric coordinates; weights sum to
/// one, so integrals are `|T| * sum(w_q f(p_q))`.
#[derive(Debug, Clone, Copy)]
pub struct TriangleRule {
    pub points: &'static [[f64; 3]],
    pub weights: &'static [f64],
    pub degree: usize,
}

impl TriangleRule {
    pub fn integrate(&self, area: f64, mut f: impl FnMut([f64; 3]) -> f64) -> f64 {
        area * self.points.iter().zip(self.weights).map(|(&p, &w)| w * f(p)).sum::<f64>()
    }
}

/// Edge-midpoint rule, exact for quadratics.
pub const EDGE_MIDPOINT: TriangleRule = TriangleRule {
    points: &[[0.5, 0.5, 0.0], [0.0, 0.5, 0.5], [0.5, 0.0, 0.5]],
    weights: &[1.0 / 3.0; 3],
    degree: 2,
};

const A1: f64 = 0.445_948_490_915_965;
const B1: f64 = 0.108_103_018_168_070;
const A2: f64 = 0.091_576_213_509_771;
const B2: f64 = 0.816_847_572_980_459;
const W1: f64 = 0.223_381_589_678_011;
const W2: f64 = 0.109_951_743_655_322;

/// Six-point symmetric rule, exact for polynomials of degree 4.
pub const DEGREE4: TriangleRule = TriangleRule {
    points: &[[B1, A1, A1], [A1, B1, A1], [A1, A1, B1], [B2, A2, A2], [A2, B2, A2], [A2, A2, B2]],
    weights: &[W1, W1, W1, W2, W2, W2],
    degree: 4,
};
