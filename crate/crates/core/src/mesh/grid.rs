use crate::error::{Error, Result};

/// Strictly increasing set of coordinates on `[0, L]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid1D {
    points: Vec<f64>,
}

impl Grid1D {
    /// Validates an arbitrary (possibly non-uniform) grid.
    pub fn from_points(points: Vec<f64>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::InvalidParameter(format!(
                "a grid needs at least 2 points, got {}",
                points.len()
            )));
        }
        if points[0] != 0.0 {
            return Err(Error::InvalidParameter(format!(
                "grid must start at 0, starts at {}",
                points[0]
            )));
        }
        if let Some(w) = points.windows(2).find(|w| !(w[1] > w[0]) || !w[1].is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "grid is not strictly increasing near {} -> {}",
                w[0], w[1]
            )));
        }
        Ok(Self { points })
    }

    /// `n` equal cells on `[0, length]`: points `j * length / n`.
    pub fn uniform(n: usize, length: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("grid cell count must be at least 1".into()));
        }
        if !(length > 0.0) || !length.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "grid length must be positive, got {length}"
            )));
        }
        let points = (0..=n)
            .map(|j| if j == n { length } else { length * j as f64 / n as f64 })
            .collect();
        Ok(Self { points })
    }

    /// The boundary-layer grid `{eps * j / n}` on `[0, eps]`.
    pub fn scaled(n: usize, eps: f64) -> Result<Self> {
        Self::uniform(n, eps)
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    /// Number of cells (one less than the number of points).
    pub fn cells(&self) -> usize {
        self.points.len() - 1
    }

    pub fn length(&self) -> f64 {
        *self.points.last().unwrap()
    }
}
