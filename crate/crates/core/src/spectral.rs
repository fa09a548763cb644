//! Eigenfunction series of the spectral formulation on the interval and the
//! square: the `f = 1` solution, the Dirac solutions in 1D and 2D, the
//! odd-frequency Dirichlet kernel, and the `v_N` partial-sum identities used
//! to analyze the `s = 1/2` boundary layer.

use crate::domain::{FracPower, TruncationPolicy};
use crate::sum::Accumulator;
use crate::{Error, Result};

use std::f64::consts::PI;

/// Magnitude of `sin(pi y / 2)` below which the Dirichlet-kernel closed form
/// is abandoned for the raw loop.
const KERNEL_PATH_TOL: f64 = 1e-6;

/// Eigenpair of the 1D Dirichlet Laplacian on `(-1,1)`:
/// `lambda_k = (k pi / 2)^2`, `e_k(x) = sin[k pi (x+1) / 2]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EigenPair1D {
    pub k: usize,
}

impl EigenPair1D {
    pub fn new(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Domain("eigenindex starts at 1".into()));
        }
        Ok(Self { k })
    }

    pub fn lambda(&self) -> f64 {
        let a = self.k as f64 * PI / 2.0;
        a * a
    }

    pub fn eval(&self, x: f64) -> f64 {
        if x == 1.0 || x == -1.0 {
            return 0.0;
        }
        (self.k as f64 * PI / 2.0 * (x + 1.0)).sin()
    }
}

/// Eigenpair on the square: `lambda_{k,m} = (k^2 + m^2) pi^2 / 4` with the
/// product of the 1D sines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EigenPair2D {
    pub k: usize,
    pub m: usize,
}

impl EigenPair2D {
    pub fn new(k: usize, m: usize) -> Result<Self> {
        if k == 0 || m == 0 {
            return Err(Error::Domain("eigenindices start at 1".into()));
        }
        Ok(Self { k, m })
    }

    pub fn lambda(&self) -> f64 {
        (self.k * self.k + self.m * self.m) as f64 * PI * PI / 4.0
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        EigenPair1D { k: self.k }.eval(x) * EigenPair1D { k: self.m }.eval(y)
    }
}

fn check_interval(x: f64, name: &str) -> Result<()> {
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!("{name} = {x} outside [-1, 1]")));
    }
    Ok(())
}

/// Solution of the spectral problem with `f = 1` on `(-1,1)`:
/// `2 (2/pi)^{2s+1} sum 1/(2m+1)^{2s+1} sin[(2m+1) pi (x+1) / 2]`,
/// truncated per the policy. Exactly zero at `x = +-1` term by term.
pub fn spectral_constant_rhs_1d(x: f64, s: FracPower, trunc: &TruncationPolicy) -> Result<f64> {
    check_interval(x, "x")?;
    if x == 1.0 || x == -1.0 {
        return Ok(0.0);
    }
    let p = 2.0 * s.value() + 1.0;
    let front = 2.0 * (2.0 / PI).powf(p);
    let half_arg = PI / 2.0 * (x + 1.0);
    let mut acc = Accumulator::new(trunc.accumulation);
    for m in 0..trunc.max_index {
        let odd = (2 * m + 1) as f64;
        acc.add(odd.powf(-p) * (odd * half_arg).sin());
    }
    Ok(front * acc.value())
}

/// Eigenfunction coefficients of the `f = 1` solution, for `k = 1..=count`:
/// zero at even `k`, `2 (2/pi)^{2s+1} (2m+1)^{-(2s+1)}` at `k = 2m+1`.
pub fn fourier_coefficients_constant_rhs(s: FracPower, count: usize) -> Vec<f64> {
    let p = 2.0 * s.value() + 1.0;
    let front = 2.0 * (2.0 / PI).powf(p);
    (1..=count)
        .map(|k| if k % 2 == 0 { 0.0 } else { front * (k as f64).powf(-p) })
        .collect()
}

/// Homogeneous spectral Dirac solution on `(-1,1)`:
/// `w_{1,s}(x) = (2/pi)^{2s} sum 1/(2m+1)^{2s} cos[(2m+1) pi x / 2]`.
///
/// Converges for `x != 0` (and everywhere when `s > 1/2`); the partial sum is
/// returned regardless, divergence at the origin is the probe module's job.
pub fn spectral_dirac_1d(x: f64, s: FracPower, trunc: &TruncationPolicy) -> Result<f64> {
    check_interval(x, "x")?;
    if x == 1.0 || x == -1.0 {
        return Ok(0.0);
    }
    let p = 2.0 * s.value();
    let front = (2.0 / PI).powf(p);
    let half_arg = PI / 2.0 * x;
    let mut acc = Accumulator::new(trunc.accumulation);
    for m in 0..trunc.max_index {
        let odd = (2 * m + 1) as f64;
        acc.add(odd.powf(-p) * (odd * half_arg).cos());
    }
    Ok(front * acc.value())
}

/// Closed form of the odd-frequency cosine partial sum,
/// `sum_{m=p}^{P-1} cos[(2m+1) pi x / 2] = (sin(P pi x) - sin(p pi x)) / (2 sin(pi x / 2))`.
pub fn dirichlet_kernel_sum(p: usize, big_p: usize, x: f64) -> Result<f64> {
    if p >= big_p {
        return Err(Error::Domain(format!("need p < P, got p = {p}, P = {big_p}")));
    }
    let denom = (PI * x / 2.0).sin();
    if denom.abs() < 1e-14 {
        return Err(Error::Singular(format!("Dirichlet kernel near-singular at x = {x}")));
    }
    Ok(((big_p as f64 * PI * x).sin() - (p as f64 * PI * x).sin()) / (2.0 * denom))
}

/// Inner 1D slice of the 2D Dirac series for a fixed first index:
/// `sum_m cos[(2m+1) pi y / 2] / [a^2 + (2m+1)^2]^s` with `a = 2k+1`.
///
/// Away from `y = 0` the sum is carried by summation by parts against the
/// Dirichlet-kernel closed form, which keeps the conditionally convergent
/// blocks bounded by the kernel envelope; on the axis the raw loop is used.
fn dirac_2d_inner(a_sq: f64, s_twice: f64, y: f64, max_index: usize) -> f64 {
    let alpha = |m: usize| {
        let odd = (2 * m + 1) as f64;
        (a_sq + odd * odd).powf(-s_twice)
    };
    let half_sin = (PI * y / 2.0).sin();
    if half_sin.abs() > KERNEL_PATH_TOL {
        // B_m = sum_{j<=m} cos[(2j+1) pi y / 2] = sin((m+1) pi y) / (2 sin(pi y / 2))
        let kernel = |m: usize| ((m + 1) as f64 * PI * y).sin() / (2.0 * half_sin);
        let mut acc = Accumulator::new(crate::domain::Accumulation::Compensated);
        let mut a_cur = alpha(0);
        for m in 0..max_index - 1 {
            let a_next = alpha(m + 1);
            acc.add((a_cur - a_next) * kernel(m));
            a_cur = a_next;
        }
        acc.add(a_cur * kernel(max_index - 1));
        acc.value()
    } else {
        let mut acc = Accumulator::new(crate::domain::Accumulation::Compensated);
        for m in 0..max_index {
            let odd = (2 * m + 1) as f64;
            acc.add(alpha(m) * (odd * PI * y / 2.0).cos());
        }
        acc.value()
    }
}

/// Homogeneous spectral Dirac solution on the square:
/// `w_{2,s}(x,y) = sum_{k,m} (2/pi)^{2s} / [(2k+1)^2 + (2m+1)^2]^s
///  cos[(2k+1) pi x / 2] cos[(2m+1) pi y / 2]`.
///
/// The double sum runs over `k, m = 0..max_index-1`, inner index first per
/// block, outer index ascending.
pub fn spectral_dirac_2d(x: f64, y: f64, s: FracPower, trunc: &TruncationPolicy) -> Result<f64> {
    check_interval(x, "x")?;
    check_interval(y, "y")?;
    if x.abs() == 1.0 || y.abs() == 1.0 {
        return Ok(0.0);
    }
    let sv = s.value();
    let front = (2.0 / PI).powf(2.0 * sv);
    let mut acc = Accumulator::new(trunc.accumulation);
    for k in 0..trunc.max_index {
        let odd_k = (2 * k + 1) as f64;
        let outer = (odd_k * PI * x / 2.0).cos();
        if outer == 0.0 {
            continue;
        }
        acc.add(outer * dirac_2d_inner(odd_k * odd_k, sv, y, trunc.max_index));
    }
    Ok(front * acc.value())
}

/// Partial sum `v_N(y) = 2 sum_{m<N} 4 / (pi^2 (2m+1)^2) sin[(2m+1) pi y / 2]`
/// of the `s = 1/2` layer analysis.
pub fn partial_sum_vn(y: f64, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("need N >= 1".into()));
    }
    let mut acc = Accumulator::new(crate::domain::Accumulation::Compensated);
    for m in 0..n {
        let odd = (2 * m + 1) as f64;
        acc.add((odd * PI * y / 2.0).sin() / (odd * odd));
    }
    Ok(8.0 / (PI * PI) * acc.value())
}

/// Closed form `v_N''(y) = -(1 - cos(N pi y)) / sin(pi y / 2)`; not a
/// numerical derivative.
pub fn vn_second_derivative(y: f64, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("need N >= 1".into()));
    }
    let denom = (PI * y / 2.0).sin();
    if denom.abs() < 1e-14 {
        return Err(Error::Singular(format!("v_N'' singular at y = {y}")));
    }
    Ok(-(1.0 - (n as f64 * PI * y).cos()) / denom)
}
