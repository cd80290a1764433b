use std::f64::consts::PI;
use std::fmt;

use crate::error::{Error, Result};
use crate::fem::ExactSolution;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProblemKind {
    /// `u = sin(pi a x)` on the unit square.
    Sine { a: f64 },
    /// `u = sin(x / mu) exp(-y / eps)`, `mu = 2 eps^2`, on `(0,1) x (0,eps)`.
    Layer { eps: f64 },
    /// `u = sin((2y - x) / eps)` on `(0,1) x (0,eps)`.
    Oblique { eps: f64 },
    /// `u = 1 + x - y / 2` on the unit square, `f = 0`.
    Linear,
}

/// A test problem, optionally multiplied by a constant `scale`
/// (which scales `u`, `grad u` and `f` alike).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TestProblem {
    pub kind: ProblemKind,
    pub scale: f64,
}

impl TestProblem {
    pub fn sine(a: f64) -> Result<Self> {
        positive("a", a)?;
        Ok(Self { kind: ProblemKind::Sine { a }, scale: 1.0 })
    }

    pub fn layer(eps: f64) -> Result<Self> {
        unit_interval("eps", eps)?;
        Ok(Self { kind: ProblemKind::Layer { eps }, scale: 1.0 })
    }

    pub fn oblique(eps: f64) -> Result<Self> {
        unit_interval("eps", eps)?;
        Ok(Self { kind: ProblemKind::Oblique { eps }, scale: 1.0 })
    }

    pub fn linear() -> Self {
        Self { kind: ProblemKind::Linear, scale: 1.0 }
    }

    /// By name: `sine` takes `a`, `layer` and `oblique` take `eps`,
    /// `linear` ignores the parameter.
    pub fn by_name(id: &str, param: f64) -> Result<Self> {
        match id {
            "sine" => Self::sine(param),
            "layer" => Self::layer(param),
            "oblique" => Self::oblique(param),
            "linear" => Ok(Self::linear()),
            other => Err(Error::InvalidParameter(format!(
                "unknown problem `{other}` (expected sine, layer, oblique or linear)"
            ))),
        }
    }

    pub fn with_scale(mut self, scale: f64) -> Self {
        self.scale = scale;
        self
    }

    pub fn name(&self) -> &'static str {
        match self.kind {
            ProblemKind::Sine { .. } => "sine",
            ProblemKind::Layer { .. } => "layer",
            ProblemKind::Oblique { .. } => "oblique",
            ProblemKind::Linear => "linear",
        }
    }

    /// `a` or `eps`; zero for the linear problem.
    pub fn parameter(&self) -> f64 {
        match self.kind {
            ProblemKind::Sine { a } => a,
            ProblemKind::Layer { eps } | ProblemKind::Oblique { eps } => eps,
            ProblemKind::Linear => 0.0,
        }
    }

    /// Domain `(0, lx) x (0, ly)`.
    pub fn domain(&self) -> (f64, f64) {
        match self.kind {
            ProblemKind::Layer { eps } | ProblemKind::Oblique { eps } => (1.0, eps),
            _ => (1.0, 1.0),
        }
    }
}

fn positive(name: &str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{name} must be positive, got {v}")))
    }
}

fn unit_interval(name: &str, v: f64) -> Result<()> {
    if v > 0.0 && v <= 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{name} must lie in (0, 1], got {v}")))
    }
}

impl fmt::Display for TestProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ProblemKind::Sine { a } => write!(f, "sine(a={a})")?,
            ProblemKind::Layer { eps } => write!(f, "layer(eps={eps})")?,
            ProblemKind::Oblique { eps } => write!(f, "oblique(eps={eps})")?,
            ProblemKind::Linear => write!(f, "linear")?,
        }
        if self.scale != 1.0 {
            write!(f, "*{}", self.scale)?;
        }
        Ok(())
    }
}

impl ExactSolution for TestProblem {
    fn u(&self, x: f64, y: f64) -> f64 {
        self.scale
            * match self.kind {
                ProblemKind::Sine { a } => (PI * a * x).sin(),
                ProblemKind::Layer { eps } => (x / (2.0 * eps * eps)).sin() * (-y / eps).exp(),
                ProblemKind::Oblique { eps } => ((2.0 * y - x) / eps).sin(),
                ProblemKind::Linear => 1.0 + x - 0.5 * y,
            }
    }

    fn grad(&self, x: f64, y: f64) -> [f64; 2] {
        let g = match self.kind {
            ProblemKind::Sine { a } => [PI * a * (PI * a * x).cos(), 0.0],
            ProblemKind::Layer { eps } => {
                let mu = 2.0 * eps * eps;
                let e = (-y / eps).exp();
                [(x / mu).cos() / mu * e, -(x / mu).sin() * e / eps]
            }
            ProblemKind::Oblique { eps } => {
                let c = ((2.0 * y - x) / eps).cos() / eps;
                [-c, 2.0 * c]
            }
            ProblemKind::Linear => [1.0, -0.5],
        };
        [self.scale * g[0], self.scale * g[1]]
    }

    fn f(&self, x: f64, y: f64) -> f64 {
        match self.kind {
            ProblemKind::Sine { a } => self.scale * (PI * a).powi(2) * (PI * a * x).sin(),
            ProblemKind::Layer { eps } => {
                let mu = 2.0 * eps * eps;
                (mu.powi(-2) - eps.powi(-2)) * self.u(x, y)
            }
            ProblemKind::Oblique { eps } => 5.0 / (eps * eps) * self.u(x, y),
            ProblemKind::Linear => 0.0,
        }
    }
}
