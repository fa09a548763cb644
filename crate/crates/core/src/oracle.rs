//! Independent brute-force verification layer: quadrature Fourier
//! coefficients, truncated spectral-operator application, classical `s = 1`
//! references and finite-difference residuals. Nothing here shares a code
//! path with the analytic modules it checks.

use crate::domain::{Field, FieldGrid};
use crate::{Error, Result};

use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadratureKind {
    Trapezoid,
    Simpson,
}

/// Fixed quadrature rule on `[-1, 1]` with the given node count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadratureRule {
    pub kind: QuadratureKind,
    pub nodes: usize,
}

impl QuadratureRule {
    pub fn new(kind: QuadratureKind, nodes: usize) -> Result<Self> {
        if nodes < 3 {
            return Err(Error::Domain("quadrature needs at least 3 nodes".into()));
        }
        if kind == QuadratureKind::Simpson && nodes % 2 == 0 {
            return Err(Error::Domain("Simpson quadrature needs an odd node count".into()));
        }
        Ok(Self { kind, nodes })
    }

    /// Integrates samples on the uniform `[-1,1]` grid of `self.nodes` points.
    fn integrate(&self, samples: impl Fn(usize) -> f64) -> f64 {
        let n = self.nodes;
        let h = 2.0 / (n - 1) as f64;
        match self.kind {
            QuadratureKind::Trapezoid => {
                let mut sum = 0.5 * (samples(0) + samples(n - 1));
                for i in 1..n - 1 {
                    sum += samples(i);
                }
                sum * h
            }
            QuadratureKind::Simpson => {
                let mut sum = samples(0) + samples(n - 1);
                for i in 1..n - 1 {
                    sum += if i % 2 == 1 { 4.0 } else { 2.0 } * samples(i);
                }
                sum * h / 3.0
            }
        }
    }
}

/// Quadrature of `field * e_k` over `(-1,1)`: the independent check of the
/// analytic eigenfunction coefficients. The field must be sampled on the
/// rule's grid and densely enough for the mode (`nodes >= 8k`).
pub fn coefficient_oracle(field: &Field, k: usize, rule: &QuadratureRule) -> Result<f64> {
    let grid = match field.grid {
        FieldGrid::Line(g) => g,
        FieldGrid::Plane(_) => {
            return Err(Error::Domain("coefficient oracle expects a 1D field".into()))
        }
    };
    if grid.points != rule.nodes {
        return Err(Error::Domain(format!(
            "field sampled on {} points but the rule uses {} nodes",
            grid.points, rule.nodes
        )));
    }
    if k == 0 {
        return Err(Error::Domain("eigenindex starts at 1".into()));
    }
    if rule.nodes < 8 * k {
        return Err(Error::Accuracy(format!(
            "field under-resolved for mode {k}: need at least {} nodes, have {}",
            8 * k,
            rule.nodes
        )));
    }
    Ok(rule.integrate(|i| {
        let x = grid.coord(i);
        field.values[i] * (k as f64 * PI / 2.0 * (x + 1.0)).sin()
    }))
}

/// Truncated spectral operator `sum_k (k pi / 2)^{2s} c_k e_k(x)` applied to
/// a finite coefficient sequence (`coeffs[k-1]` holds `c_k`).
pub fn apply_spectral_operator(coeffs: &[f64], s: f64, x: f64) -> f64 {
    let mut sum = 0.0;
    for (i, &c) in coeffs.iter().enumerate() {
        if c == 0.0 {
            continue;
        }
        let k = (i + 1) as f64;
        sum += (k * PI / 2.0).powf(2.0 * s) * c * (k * PI / 2.0 * (x + 1.0)).sin();
    }
    sum
}

/// Classical `s = 1` reference problems.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassicalProblem {
    /// `-u'' = 1`, zero boundary: `(1 - x^2)/2`.
    ConstantRhs1D,
    /// `-u'' = delta_0`, zero boundary: `(1 - |x|)/2`.
    Dirac1D,
}

pub fn classical_reference(problem: ClassicalProblem, x: f64) -> Result<f64> {
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!("x = {x} outside [-1, 1]")));
    }
    Ok(match problem {
        ClassicalProblem::ConstantRhs1D => (1.0 - x * x) / 2.0,
        ClassicalProblem::Dirac1D => (1.0 - x.abs()) / 2.0,
    })
}

/// Maximum absolute 5-point Laplacian over the interior of a uniformly
/// sampled 2D field.
pub fn discrete_laplacian_residual(field: &Field, h: f64) -> Result<f64> {
    let grid = match field.grid {
        FieldGrid::Plane(g) => g,
        FieldGrid::Line(_) => {
            return Err(Error::Domain("Laplacian residual expects a 2D field".into()))
        }
    };
    let n = grid.points_per_axis;
    if n < 5 {
        return Err(Error::Domain("grid too coarse: need at least 5 points per axis".into()));
    }
    if ((grid.step() - h) / h).abs() > 1e-12 {
        return Err(Error::Domain(format!(
            "step mismatch: grid spacing {} but h = {h}",
            grid.step()
        )));
    }
    let at = |i: usize, j: usize| field.values[i * n + j];
    let mut max_res = 0.0f64;
    for i in 1..n - 1 {
        for j in 1..n - 1 {
            let lap =
                (at(i + 1, j) + at(i - 1, j) + at(i, j + 1) + at(i, j - 1) - 4.0 * at(i, j))
                    / (h * h);
            max_res = max_res.max(lap.abs());
        }
    }
    Ok(max_res)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::{Formulation, FracPower, Grid1D, Grid2D, TruncationPolicy};

    fn line_field(points: usize, f: impl Fn(f64) -> f64) -> Field {
        let grid = Grid1D::new(points).unwrap();
        let values = grid.coords().map(&f).collect();
        Field::new(
            FieldGrid::Line(grid),
            values,
            Formulation::Spectral,
            TruncationPolicy::new(1).unwrap(),
            FracPower::new(0.5).unwrap(),
        )
        .unwrap()
    }

    fn plane_field(points: usize, f: impl Fn(f64, f64) -> f64) -> Field {
        let grid = Grid2D::new(points).unwrap();
        let mut values = Vec::with_capacity(grid.point_count());
        for i in 0..points {
            for j in 0..points {
                values.push(f(grid.coord(i), grid.coord(j)));
            }
        }
        Field::new(
            FieldGrid::Plane(grid),
            values,
            Formulation::Spectral,
            TruncationPolicy::new(1).unwrap(),
            FracPower::new(0.5).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn constant_field_against_first_modes() {
        let field = line_field(10_001, |_| 1.0);
        let rule = QuadratureRule::new(QuadratureKind::Simpson, 10_001).unwrap();
        // (1, e_1) = 4/pi, (1, e_2) = 0 by odd symmetry.
        let c1 = coefficient_oracle(&field, 1, &rule).unwrap();
        assert!((c1 - 4.0 / PI).abs() < 1e-10);
        let c2 = coefficient_oracle(&field, 2, &rule).unwrap();
        assert!(c2.abs() < 1e-10);
    }

    #[test]
    fn dirac_field_coefficient_matches_analytic() {
        // (w_{1,s}, e_3) = -(3 pi / 2)^{-2s} at s = 0.75.
        let s = FracPower::new(0.75).unwrap();
        let t = TruncationPolicy::new(100_000).unwrap();
        let field = line_field(20_001, |x| {
            crate::spectral::spectral_dirac_1d(x, s, &t).unwrap()
        });
        let rule = QuadratureRule::new(QuadratureKind::Simpson, 20_001).unwrap();
        let c3 = coefficient_oracle(&field, 3, &rule).unwrap();
        let expected = -(3.0 * PI / 2.0).powf(-1.5);
        assert!((c3 - expected).abs() < 1e-6, "c3 = {c3}, want {expected}");
    }

    #[test]
    fn simpson_is_fourth_order() {
        // Error against (1, e_5) shrinks by >= 8x when nodes double.
        let exact = 4.0 / (5.0 * PI);
        let err = |nodes: usize| {
            let field = line_field(nodes, |_| 1.0);
            let rule = QuadratureRule::new(QuadratureKind::Simpson, nodes).unwrap();
            (coefficient_oracle(&field, 5, &rule).unwrap() - exact).abs()
        };
        let e1 = err(81);
        let e2 = err(161);
        assert!(e1 / e2 >= 8.0, "e1 = {e1}, e2 = {e2}");
    }

    #[test]
    fn under_resolved_mode_rejected() {
        let field = line_field(41, |_| 1.0);
        let rule = QuadratureRule::new(QuadratureKind::Simpson, 41).unwrap();
        assert!(matches!(coefficient_oracle(&field, 10, &rule), Err(Error::Accuracy(_))));
    }

    #[test]
    fn rule_validation() {
        assert!(QuadratureRule::new(QuadratureKind::Simpson, 100).is_err());
        assert!(QuadratureRule::new(QuadratureKind::Simpson, 101).is_ok());
        assert!(QuadratureRule::new(QuadratureKind::Trapezoid, 2).is_err());
    }

    #[test]
    fn operator_roundtrip_reproduces_rhs_expansion() {
        // Applying the operator to the f=1 solution coefficients telescopes
        // to the truncated Fourier expansion of f at x.
        let s = FracPower::new(0.5).unwrap();
        let coeffs = crate::spectral::fourier_coefficients_constant_rhs(s, 100);
        let x = 0.37;
        let image = apply_spectral_operator(&coeffs, 0.5, x);
        let mut partial_f = 0.0;
        for m in 0..50 {
            let k = (2 * m + 1) as f64;
            partial_f += 4.0 / (k * PI) * (k * PI / 2.0 * (x + 1.0)).sin();
        }
        assert!((image - partial_f).abs() < 1e-12);
        // Zero coefficients map to zero.
        assert_eq!(apply_spectral_operator(&[0.0; 16], 0.5, x), 0.0);
    }

    #[test]
    fn operator_on_dirac_coefficients() {
        // w_{1,s} coefficients reproduce the truncated delta expansion
        // sum (-1)^m sin[(2m+1) pi (x+1)/2].
        let sv = 0.6;
        let mut coeffs = vec![0.0; 100];
        for m in 0..50 {
            let k = 2 * m + 1;
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            coeffs[k - 1] = sign * (k as f64 * PI / 2.0).powf(-2.0 * sv);
        }
        let x = 0.37;
        let image = apply_spectral_operator(&coeffs, sv, x);
        let mut partial = 0.0;
        for m in 0..50 {
            let k = (2 * m + 1) as f64;
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            partial += sign * (k * PI / 2.0 * (x + 1.0)).sin();
        }
        assert!((image - partial).abs() < 1e-12);
    }

    #[test]
    fn classical_references() {
        assert_eq!(classical_reference(ClassicalProblem::ConstantRhs1D, 0.0).unwrap(), 0.5);
        assert_eq!(classical_reference(ClassicalProblem::Dirac1D, 0.0).unwrap(), 0.5);
        assert_eq!(classical_reference(ClassicalProblem::Dirac1D, 1.0).unwrap(), 0.0);
        assert_eq!(classical_reference(ClassicalProblem::Dirac1D, -1.0).unwrap(), 0.0);
        assert!(classical_reference(ClassicalProblem::Dirac1D, 1.5).is_err());
    }

    #[test]
    fn laplacian_residual_exactness() {
        let f = plane_field(201, |_, _| 3.7);
        assert_eq!(discrete_laplacian_residual(&f, 0.01).unwrap(), 0.0);
        // x^2 - y^2 is harmonic and quadratic: the 5-point stencil is exact.
        let f = plane_field(201, |x, y| x * x - y * y);
        assert!(discrete_laplacian_residual(&f, 0.01).unwrap() < 1e-9);
        let f = plane_field(4, |_, _| 0.0);
        assert!(discrete_laplacian_residual(&f, 2.0 / 3.0).is_err());
    }
}
