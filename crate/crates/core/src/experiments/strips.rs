use crate::error::{Error, Result};
use crate::estimator::{estimator_report, EstimatorReport, Indicators, Region, Weight};
use crate::experiments::case::Case;
use crate::mesh::{Structured, Triangulation};

/// Estimator quantities over the strip `(x_{i-1}, x_{i+1}) x (0, L)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StripReport {
    pub index: usize,
    pub e_bubble: f64,
    pub e_uniform: f64,
    pub e0_bubble: f64,
    pub e0_uniform: f64,
    pub error: f64,
    pub y: f64,
}

impl StripReport {
    /// `E°_i / Y_i` for the given weight; zero when `Y_i` vanishes.
    pub fn short_over_y(&self, weight: Weight) -> f64 {
        let e0 = match weight {
            Weight::Bubble => self.e0_bubble,
            Weight::Uniform => self.e0_uniform,
        };
        if self.y > 0.0 {
            e0 / self.y
        } else {
            0.0
        }
    }

    pub fn e_sq(&self, weight: Weight) -> f64 {
        match weight {
            Weight::Bubble => self.e_bubble.powi(2),
            Weight::Uniform => self.e_uniform.powi(2),
        }
    }

    fn from_report(index: usize, r: &EstimatorReport) -> Self {
        Self {
            index,
            e_bubble: r.bubble.total,
            e_uniform: r.uniform.total,
            e0_bubble: r.bubble.short,
            e0_uniform: r.uniform.short,
            error: r.error,
            y: r.y,
        }
    }
}

fn structured(tri: &Triangulation) -> Result<&Structured> {
    tri.mesh
        .structured()
        .ok_or_else(|| Error::InvalidArgument("strips need a tensor-product mesh".into()))
}

/// Strip `i` (`0 <= i <= nx`) as an element region, by element centroid.
pub fn strip_region(tri: &Triangulation, i: usize) -> Result<Region> {
    let s = structured(tri)?;
    let n = s.nx();
    if i > n {
        return Err(Error::InvalidArgument(format!("strip {i} out of range 0..={n}")));
    }
    let x = s.xs.points();
    let (lo, hi) = (x[i.saturating_sub(1)], x[(i + 1).min(n)]);
    Ok(Region::from_centroids(tri, format!("strip{i}"), |c| c[0] > lo && c[0] < hi))
}

/// One strip through the generic region machinery.
pub fn strip_report(case: &Case, i: usize) -> Result<StripReport> {
    let region = strip_region(&case.tri, i)?;
    Ok(StripReport::from_report(i, &estimator_report(&case.indicators, &region)))
}

/// All strips in one pass. Cell column `c` lies in strips `c` and `c + 1`;
/// an edge inside column `c` counts for both, an edge on the grid line
/// between columns `c` and `c + 1` only for strip `c + 1`.
pub fn strip_reports(case: &Case) -> Result<Vec<StripReport>> {
    let tri = &case.tri;
    let s = structured(tri)?;
    let n = s.nx();
    let ind: &Indicators = &case.indicators;
    // per strip: bubble, uniform, short bubble, short uniform, volume, error, osc
    let mut acc = vec![[0.0f64; 7]; n + 1];
    for t in 0..tri.mesh.num_triangles() {
        let c = s.triangle_cell(t).0;
        for a in &mut acc[c..=c + 1] {
            a[4] += ind.volume_h[t];
            a[5] += ind.error[t];
            a[6] += ind.osc_f[t];
        }
    }
    for (e, edge) in tri.topo.edges().iter().enumerate() {
        let (Some(l), Some(r)) = (edge.left, edge.right) else { continue };
        let (cl, cr) = (s.triangle_cell(l).0, s.triangle_cell(r).0);
        let strips = if cl == cr { cl..=cl + 1 } else { cl.max(cr)..=cl.max(cr) };
        let (ub, uu) = (ind.bubble_weight[e] * ind.jump_sq[e], ind.jump_sq[e]);
        for a in &mut acc[strips] {
            a[0] += ub;
            a[1] += uu;
            if ind.short[e] {
                a[2] += ub;
                a[3] += uu;
            }
        }
    }
    Ok(acc
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let error = a[5].sqrt();
            StripReport {
                index: i,
                e_bubble: (a[0] + a[4]).sqrt(),
                e_uniform: (a[1] + a[4]).sqrt(),
                e0_bubble: a[2].sqrt(),
                e0_uniform: a[3].sqrt(),
                error,
                y: error + a[6].sqrt(),
            }
        })
        .collect())
}

/// `max_i E°_i / Y_i` over the interior strips `1..nx`.
pub fn max_strip_ratio(strips: &[StripReport], weight: Weight) -> f64 {
    let n = strips.len().saturating_sub(1);
    strips.iter().filter(|s| s.index >= 1 && s.index < n).map(|s| s.short_over_y(weight)).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiments::case::RunOptions;
    use crate::experiments::problems::TestProblem;

    #[test]
    fn fast_route_matches_region_masks() {
        let case = Case::solve(TestProblem::sine(1.0).unwrap(), 6, 24, &RunOptions::default()).unwrap();
        let fast = strip_reports(&case).unwrap();
        assert_eq!(fast.len(), 7);
        for f in &fast {
            let slow = strip_report(&case, f.index).unwrap();
            for (a, b) in [
                (f.e_bubble, slow.e_bubble),
                (f.e_uniform, slow.e_uniform),
                (f.e0_bubble, slow.e0_bubble),
                (f.e0_uniform, slow.e0_uniform),
                (f.y, slow.y),
            ] {
                assert!((a - b).abs() <= 1e-12 * b.max(1e-300), "strip {}: {a} vs {b}", f.index);
            }
        }
        // boundary strips hold no short edges
        assert_eq!(fast[0].e0_uniform, 0.0);
        assert_eq!(fast[6].e0_uniform, 0.0);
        assert!(fast[3].e0_uniform > 0.0);
        assert!(strip_report(&case, 7).is_err());
    }

    #[test]
    fn strips_cover_the_domain_at_most_twice() {
        let case = Case::solve(TestProblem::sine(3.0).unwrap(), 8, 32, &RunOptions::default()).unwrap();
        let strips = strip_reports(&case).unwrap();
        let global = case.global_report();
        for w in Weight::ALL {
            let sum: f64 = strips.iter().map(|s| s.e_sq(w)).sum();
            let e2 = global.lower(w).total.powi(2);
            assert!(sum >= e2 * (1.0 - 1e-12) && sum <= 2.0 * e2 * (1.0 + 1e-12));
        }
    }
}
