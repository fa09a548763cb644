//! Harmonic-lifting split of the inhomogeneous Dirac problems: the boundary
//! profile `phi_1`, its Fourier sine coefficients, the harmonic lift on the
//! square, and the composed spectral solutions in 1D and 2D.

use crate::domain::{FracPower, TruncationPolicy};
use crate::special::fundamental_constant;
use crate::spectral::{spectral_dirac_1d, spectral_dirac_2d};
use crate::sum::KahanSum;
use crate::{Error, Result};

use std::f64::consts::PI;

/// Boundary profile `phi_1(x) = (x^2 + 1)^{s-1} - 2^{s-1}`; vanishes at
/// `x = +-1`.
pub fn phi1(x: f64, s: FracPower) -> Result<f64> {
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!("x = {x} outside [-1, 1]")));
    }
    let e = s.value() - 1.0;
    Ok((x * x + 1.0).powf(e) - 2f64.powf(e))
}

/// Fourier sine coefficients `A_k` of `phi_1` on `(-1,1)`; even indices are
/// identically zero by parity.
#[derive(Debug, Clone, PartialEq)]
pub struct LiftCoefficients {
    pub s: FracPower,
    /// `a[k-1]` holds `A_k` for `k = 1..=2*count`; even entries are zero.
    a: Vec<f64>,
    pub count: usize,
    pub quadrature_nodes: usize,
}

impl LiftCoefficients {
    /// `A_k` for a 1-based index `k`; zero beyond the retained range.
    pub fn coefficient(&self, k: usize) -> f64 {
        if k == 0 || k > self.a.len() {
            0.0
        } else {
            self.a[k - 1]
        }
    }

    pub fn max_index(&self) -> usize {
        self.a.len()
    }
}

/// Composite Simpson on [0, 1] with `intervals` subintervals (even).
fn simpson01(f: &impl Fn(f64) -> f64, intervals: usize) -> f64 {
    let h = 1.0 / intervals as f64;
    let mut sum = KahanSum::new();
    sum.add(f(0.0) + f(1.0));
    for i in 1..intervals {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        sum.add(w * f(i as f64 * h));
    }
    sum.value() * h / 3.0
}

/// Adaptive refinement: double the Simpson interval count until two levels
/// agree to `1e-10` absolute.
fn refine_simpson(f: &impl Fn(f64) -> f64, start_intervals: usize) -> Result<f64> {
    let mut n = start_intervals.max(64).next_power_of_two();
    let mut prev = simpson01(f, n);
    for _ in 0..16 {
        n *= 2;
        let cur = simpson01(f, n);
        let diff = (cur - prev).abs();
        if diff <= 1e-10 {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::Accuracy(format!(
        "coefficient quadrature did not converge below 1e-9 by {n} intervals"
    )))
}

/// Computes `A_{2k+1} = 2 int_0^1 phi_1(x) sin[(2k+1) pi (x+1) / 2] dx` for
/// `k = 0..count-1`; even coefficients are set to exactly zero.
pub fn lift_coefficients(s: FracPower, count: usize, nodes: usize) -> Result<LiftCoefficients> {
    if count < 1 {
        return Err(Error::Domain("need at least one coefficient".into()));
    }
    if nodes < 64 {
        return Err(Error::Domain("need at least 64 quadrature nodes".into()));
    }
    let mut a = vec![0.0; 2 * count];
    for j in 0..count {
        let k = 2 * j + 1;
        let freq = k as f64 * PI / 2.0;
        let f = |x: f64| {
            let e = s.value() - 1.0;
            ((x * x + 1.0).powf(e) - 2f64.powf(e)) * (freq * (x + 1.0)).sin()
        };
        // The integrand oscillates with k; start with enough intervals to
        // resolve it.
        let start = nodes.max(8 * k);
        a[k - 1] = 2.0 * refine_simpson(&f, start)?;
    }
    Ok(LiftCoefficients { s, a, count, quadrature_nodes: nodes })
}

/// `cosh(k pi y / 2) / cosh(k pi / 2)` in overflow-safe form.
#[inline]
fn cosh_ratio(k: usize, y: f64) -> f64 {
    let kpi = k as f64 * PI;
    let ay = y.abs();
    (kpi * (ay - 1.0) / 2.0).exp() * (1.0 + (-kpi * ay).exp()) / (1.0 + (-kpi).exp())
}

/// One half of the lift: `vtilde(x,y) = sum_k A_k sin[k pi (x+1)/2]
/// cosh(k pi y / 2) / cosh(k pi / 2)`, zero on `x = +-1`.
fn vtilde(x: f64, y: f64, coeffs: &LiftCoefficients) -> f64 {
    if x.abs() == 1.0 {
        return 0.0;
    }
    let mut sum = KahanSum::new();
    let mut k = 1;
    while k <= coeffs.max_index() {
        let a = coeffs.coefficient(k);
        if a != 0.0 {
            sum.add(a * cosh_ratio(k, y) * (k as f64 * PI / 2.0 * (x + 1.0)).sin());
        }
        k += 2;
    }
    sum.value()
}

/// Full harmonic lift `v_{2,s}(x,y) = vtilde(x,y) + vtilde(y,x) + 2^{s-1}`:
/// the classical Laplace solution carrying the Dirac boundary trace (without
/// the `a(2,s)` factor).
pub fn harmonic_lift_2d(x: f64, y: f64, s: FracPower, coeffs: &LiftCoefficients) -> Result<f64> {
    if !(-1.0..=1.0).contains(&x) || !(-1.0..=1.0).contains(&y) {
        return Err(Error::Domain(format!("point ({x}, {y}) outside the closed square")));
    }
    if coeffs.s != s {
        return Err(Error::Domain(
            "lift coefficients were computed for a different fractional power".into(),
        ));
    }
    Ok(vtilde(x, y, coeffs) + vtilde(y, x, coeffs) + 2f64.powf(s.value() - 1.0))
}

/// Spectral Dirac solution on the interval: `u_s(x) = w_{1,s}(x) + a(1,s)`,
/// defined for `s != 1/2`.
pub fn spectral_dirac_solution_1d(x: f64, s: FracPower, trunc: &TruncationPolicy) -> Result<f64> {
    let a = match fundamental_constant(1, s) {
        Ok(a) => a,
        Err(Error::LogCase) => {
            return Err(Error::Unsupported(
                "s = 1/2 is excluded in 1D: the constant lift is undefined without the \
                 log-case trace"
                    .into(),
            ))
        }
        Err(e) => return Err(e),
    };
    Ok(spectral_dirac_1d(x, s, trunc)? + a)
}

/// Spectral Dirac solution on the square:
/// `u_s(x,y) = w_{2,s}(x,y) + a(2,s) v_{2,s}(x,y)`.
pub fn spectral_dirac_solution_2d(
    x: f64,
    y: f64,
    s: FracPower,
    trunc: &TruncationPolicy,
    coeffs: &LiftCoefficients,
) -> Result<f64> {
    let a = fundamental_constant(2, s)?;
    Ok(spectral_dirac_2d(x, y, s, trunc)? + a * harmonic_lift_2d(x, y, s, coeffs)?)
}
