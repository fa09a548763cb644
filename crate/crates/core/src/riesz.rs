//! Closed-form solutions of the Riesz formulation: the ball solution
//! `c(n,s)(1 - ||x||^2)^s` for `f = 1`, the fundamental solution
//! `a(n,s) ||x||^{2s-n}` for `f = delta_0`, and the boundary traces the
//! inhomogeneous spectral problem borrows from it.

use crate::domain::FracPower;
use crate::special::{fundamental_constant, riesz_ball_constant};
use crate::{Error, Result};

/// Default constant of the 1D logarithmic fundamental solution (`2s = n = 1`).
///
/// The standard half-Laplacian normalization; configurable on
/// [`FundamentalSolution`] since the literature does not fix it uniquely.
pub const LOG_CASE_CONSTANT_1D: f64 = -1.0 / std::f64::consts::PI;

fn norm(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

/// Ball solution `u_s^R(x) = c(n,s)(1 - ||x||^2)^s` of the Riesz problem with
/// `f = 1`; exactly zero on the boundary.
pub fn riesz_constant_rhs(x: &[f64], n: u8, s: FracPower) -> Result<f64> {
    if x.len() != n as usize {
        return Err(Error::Domain(format!("point has {} coordinates, expected {n}", x.len())));
    }
    let r = norm(x);
    if r > 1.0 {
        return Err(Error::Domain(format!("point with ||x|| = {r} lies outside the unit ball")));
    }
    if r == 1.0 {
        return Ok(0.0);
    }
    let c = riesz_ball_constant(n, s)?;
    Ok(c * (1.0 - r * r).powf(s.value()))
}

/// The closed-form Riesz ball solution for fixed `(n, s)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RieszBallSolution {
    pub n: u8,
    pub s: FracPower,
    pub c_ns: f64,
}

impl RieszBallSolution {
    pub fn new(n: u8, s: FracPower) -> Result<Self> {
        Ok(Self { n, s, c_ns: riesz_ball_constant(n, s)? })
    }

    pub fn eval(&self, x: &[f64]) -> Result<f64> {
        riesz_constant_rhs(x, self.n, self.s)
    }

    /// Maximum over the ball, attained at the origin.
    pub fn max_value(&self) -> f64 {
        self.c_ns
    }
}

/// Fundamental solution of `(-Delta)^s u = delta_0` on `R^n`:
/// `a(n,s) ||x||^{2s-n}` when `2s != n`, `a_log ln ||x||` when `2s = n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FundamentalSolution {
    pub n: u8,
    pub s: FracPower,
    /// Power-branch constant; `None` in the log case.
    pub a_ns: Option<f64>,
    /// Log-branch constant, used only when `2s = n`.
    pub a_log: f64,
}

impl FundamentalSolution {
    pub fn new(n: u8, s: FracPower) -> Result<Self> {
        let a_ns = match fundamental_constant(n, s) {
            Ok(a) => Some(a),
            Err(Error::LogCase) => None,
            Err(e) => return Err(e),
        };
        Ok(Self { n, s, a_ns, a_log: LOG_CASE_CONSTANT_1D })
    }

    pub fn with_log_constant(mut self, a_log: f64) -> Self {
        self.a_log = a_log;
        self
    }

    pub fn is_log_case(&self) -> bool {
        self.a_ns.is_none()
    }

    pub fn eval(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.n as usize {
            return Err(Error::Domain(format!(
                "point has {} coordinates, expected {}",
                x.len(),
                self.n
            )));
        }
        let r = norm(x);
        if r == 0.0 {
            return Err(Error::Singular("fundamental solution is singular at the origin".into()));
        }
        match self.a_ns {
            Some(a) => Ok(a * r.powf(2.0 * self.s.value() - self.n as f64)),
            None => Ok(self.a_log * r.ln()),
        }
    }

    /// Exterior trace `u = a(n,s)||x||^{2s-n}` on `R^n \ Omega`; read-only
    /// companion of the closed-form solution, no solver behind it.
    pub fn exterior_trace(&self, x: &[f64]) -> Result<f64> {
        self.eval(x)
    }
}

/// Convenience wrapper: fundamental solution value at a point, dispatching to
/// the log branch when `2s = n`.
pub fn fundamental_solution(x: &[f64], n: u8, s: FracPower) -> Result<f64> {
    FundamentalSolution::new(n, s)?.eval(x)
}

/// Boundary trace of the 2D Dirac problem on any of the four sides of the
/// square: `a(2,s)(t^2 + 1)^{s-1}` where `t` runs along the side.
pub fn dirac_boundary_trace_2d(t: f64, s: FracPower) -> Result<f64> {
    if !(-1.0..=1.0).contains(&t) {
        return Err(Error::Domain(format!("side coordinate {t} outside [-1, 1]")));
    }
    let a = fundamental_constant(2, s)?;
    Ok(a * (t * t + 1.0).powf(s.value() - 1.0))
}
