//! Property tests: randomized checks of the algebraic identities and
//! symmetries that must hold independent of truncation choices.

use fraclap::lifting::spectral_dirac_solution_1d;
use fraclap::riesz::{fundamental_solution, riesz_constant_rhs};
use fraclap::spectral::{
    dirichlet_kernel_sum, spectral_constant_rhs_1d, spectral_dirac_1d, spectral_dirac_2d,
    vn_second_derivative, EigenPair1D,
};
use fraclap::{gamma, FracPower, TruncationPolicy};

use proptest::prelude::*;
use std::f64::consts::PI;

fn frac(s: f64) -> FracPower {
    FracPower::new(s).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn gamma_recurrence(x in 0.1f64..10.0) {
        let lhs = gamma(x + 1.0).unwrap();
        let rhs = x * gamma(x).unwrap();
        prop_assert!(((lhs - rhs) / lhs).abs() <= 1e-12, "x = {x}: {lhs} vs {rhs}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn gamma_reflection(x in 0.05f64..0.95) {
        let lhs = gamma(x).unwrap() * gamma(1.0 - x).unwrap();
        let rhs = PI / (PI * x).sin();
        prop_assert!(((lhs - rhs) / rhs).abs() <= 1e-10, "x = {x}: {lhs} vs {rhs}");
    }

    #[test]
    fn dirichlet_kernel_matches_raw_loop(
        p in 0usize..50,
        len in 1usize..200,
        x in -1.0f64..1.0,
    ) {
        prop_assume!((PI * x / 2.0).sin().abs() > 1e-3);
        let big_p = p + len;
        let raw: f64 = (p..big_p).map(|m| ((2 * m + 1) as f64 * PI * x / 2.0).cos()).sum();
        let cf = dirichlet_kernel_sum(p, big_p, x).unwrap();
        let scale = cf.abs().max(1.0);
        prop_assert!((raw - cf).abs() / scale <= 1e-10, "p={p}, P={big_p}, x={x}: {raw} vs {cf}");
    }

    #[test]
    fn vn_second_derivative_matches_raw_loop(n in 1usize..200, y in -1.0f64..1.0) {
        prop_assume!((PI * y / 2.0).sin().abs() > 1e-3);
        // Term-by-term second derivative of v_N: -2 sum sin[(2m+1) pi y / 2].
        let raw: f64 = -2.0 * (0..n).map(|m| ((2 * m + 1) as f64 * PI * y / 2.0).sin()).sum::<f64>();
        let cf = vn_second_derivative(y, n).unwrap();
        let scale = cf.abs().max(1.0);
        prop_assert!((raw - cf).abs() / scale <= 1e-10, "N={n}, y={y}: {raw} vs {cf}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn spectral_solutions_even_in_x(x in 0.0f64..1.0, sv in 0.05f64..0.95) {
        let s = frac(sv);
        let trunc = TruncationPolicy::new(500).unwrap();
        let u = spectral_constant_rhs_1d(x, s, &trunc).unwrap();
        let um = spectral_constant_rhs_1d(-x, s, &trunc).unwrap();
        prop_assert!((u - um).abs() <= 1e-12 * u.abs().max(1.0));
        let w = spectral_dirac_1d(x, s, &trunc).unwrap();
        let wm = spectral_dirac_1d(-x, s, &trunc).unwrap();
        prop_assert!((w - wm).abs() <= 1e-12 * w.abs().max(1.0));
    }

    #[test]
    fn riesz_solution_even(x in 0.0f64..1.0, sv in 0.05f64..0.95) {
        let s = frac(sv);
        let u = riesz_constant_rhs(&[x], 1, s).unwrap();
        let um = riesz_constant_rhs(&[-x], 1, s).unwrap();
        prop_assert_eq!(u, um);
    }

    #[test]
    fn fundamental_homogeneity(r in 0.05f64..1.0, sv in 0.05f64..0.95, n in 1u8..3) {
        prop_assume!((2.0 * sv - n as f64).abs() > 1e-6);
        let s = frac(sv);
        let x = if n == 1 { vec![r] } else { vec![r / 2f64.sqrt(), r / 2f64.sqrt()] };
        let x2: Vec<f64> = x.iter().map(|&c| 2.0 * c).collect();
        let v = fundamental_solution(&x, n, s).unwrap();
        let v2 = fundamental_solution(&x2, n, s).unwrap();
        let expect = 2f64.powf(2.0 * sv - n as f64);
        prop_assert!((v2 / v - expect).abs() <= 1e-10 * expect.abs().max(1.0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn dirac_2d_symmetries(x in 0.0f64..1.0, y in 0.0f64..1.0, sv in 0.3f64..0.95) {
        let s = frac(sv);
        let trunc = TruncationPolicy::new(64).unwrap();
        let v = spectral_dirac_2d(x, y, s, &trunc).unwrap();
        let swapped = spectral_dirac_2d(y, x, s, &trunc).unwrap();
        let mirrored = spectral_dirac_2d(-x, y, s, &trunc).unwrap();
        let scale = v.abs().max(1.0);
        prop_assert!((v - swapped).abs() <= 1e-10 * scale);
        prop_assert!((v - mirrored).abs() <= 1e-10 * scale);
    }

    #[test]
    fn constant_rhs_tail_bound(sv in 0.1f64..0.95, x in -0.99f64..0.99) {
        // Dropping terms m >= M changes the value by at most
        // 2 (2/pi)^{2s+1} (2M-1)^{-2s} / (4s).
        let s = frac(sv);
        let m_small = 200usize;
        let coarse = spectral_constant_rhs_1d(x, s, &TruncationPolicy::new(m_small).unwrap()).unwrap();
        let fine = spectral_constant_rhs_1d(x, s, &TruncationPolicy::new(100_000).unwrap()).unwrap();
        let bound = 2.0 * (2.0 / PI).powf(2.0 * sv + 1.0)
            * (2.0 * m_small as f64 - 1.0).powf(-2.0 * sv)
            / (4.0 * sv);
        prop_assert!((fine - coarse).abs() <= bound * 1.0001, "s={sv}, x={x}");
    }

    #[test]
    fn dirac_solution_1d_boundary_value(sv in 0.05f64..0.95) {
        prop_assume!((sv - 0.5).abs() > 1e-6);
        let s = frac(sv);
        let trunc = TruncationPolicy::new(100).unwrap();
        let at_boundary = spectral_dirac_solution_1d(1.0, s, &trunc).unwrap();
        let trace = fundamental_solution(&[1.0], 1, s).unwrap();
        prop_assert_eq!(at_boundary, trace);
    }
}

#[test]
fn eigenfunctions_orthonormal() {
    // Simpson quadrature of e_j e_k over (-1,1) with 10^4+1 nodes.
    let nodes = 10_001usize;
    let h = 2.0 / (nodes - 1) as f64;
    for j in 1..=20usize {
        let ej = EigenPair1D::new(j).unwrap();
        for k in j..=20usize {
            let ek = EigenPair1D::new(k).unwrap();
            let mut sum = 0.0;
            for i in 0..nodes {
                let x = -1.0 + i as f64 * h;
                let w = if i == 0 || i == nodes - 1 {
                    1.0
                } else if i % 2 == 1 {
                    4.0
                } else {
                    2.0
                };
                sum += w * ej.eval(x) * ek.eval(x);
            }
            let integral = sum * h / 3.0;
            let expect = if j == k { 1.0 } else { 0.0 };
            assert!(
                (integral - expect).abs() < 1e-8,
                "(e_{j}, e_{k}) = {integral}, want {expect}"
            );
        }
    }
}
