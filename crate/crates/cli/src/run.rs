//! Subcommand implementations: config resolution, evaluation and file output.

use crate::output::{fmt_f64, write_table, Cell, Format};
use crate::{CliError, CommonArgs};

use fraclap::asymptotics::{
    boundary_ratio_table, log_exponent_estimate, max_value_curves, TABLE_LOG_MODEL_EXPONENT,
};
use fraclap::lifting::{
    lift_coefficients, spectral_dirac_solution_1d, spectral_dirac_solution_2d,
};
use fraclap::oracle::{
    apply_spectral_operator, classical_reference, coefficient_oracle, ClassicalProblem,
    QuadratureKind, QuadratureRule,
};
use fraclap::riesz::{fundamental_solution, riesz_constant_rhs};
use fraclap::spectral::{
    fourier_coefficients_constant_rhs, spectral_constant_rhs_1d, spectral_dirac_2d,
};
use fraclap::{
    riesz_ball_constant, Field, FieldGrid, Formulation, FracPower, Grid1D, TruncationPolicy,
};

use serde::Deserialize;
use std::f64::consts::PI;
use std::path::{Path, PathBuf};

/// Coefficient count of the 2D harmonic lift.
const LIFT_COUNT: usize = 500;
/// Starting quadrature node count for the lift coefficients.
const LIFT_NODES: usize = 64;

/// Config-file schema; every field optional, flags take precedence.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    s: Option<Vec<f64>>,
    grid: Option<usize>,
    trunc: Option<usize>,
    h: Option<f64>,
    j: Option<String>,
    dim: Option<u8>,
    out: Option<PathBuf>,
    format: Option<String>,
}

fn load_file_config(path: Option<&Path>) -> Result<FileConfig, CliError> {
    let Some(path) = path else { return Ok(FileConfig::default()) };
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Config(format!("invalid config {}: {e}", path.display())))
}

fn parse_s_list(text: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<f64>()
                .map_err(|e| CliError::Config(format!("invalid s value '{part}': {e}")))
        })
        .collect()
}

fn parse_j_range(text: &str) -> Result<(usize, usize), CliError> {
    let (a, b) = text
        .split_once("..")
        .ok_or_else(|| CliError::Config(format!("invalid range '{text}', expected a..b")))?;
    let lo = a.parse().map_err(|e| CliError::Config(format!("invalid range start '{a}': {e}")))?;
    let hi = b.parse().map_err(|e| CliError::Config(format!("invalid range end '{b}': {e}")))?;
    Ok((lo, hi))
}

fn validated_powers(values: &[f64]) -> Result<Vec<FracPower>, CliError> {
    values.iter().map(|&v| FracPower::new(v).map_err(CliError::from)).collect()
}

/// Fully materialized run configuration, echoed into every output header.
struct Resolved {
    command: &'static str,
    s: Vec<f64>,
    grid: usize,
    trunc: usize,
    h: f64,
    j: (usize, usize),
    dim: u8,
    out: PathBuf,
    format: Format,
}

impl Resolved {
    fn header(&self) -> Vec<(String, String)> {
        let s_list = self.s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
        vec![
            ("version".into(), format!("fraclap {}", env!("CARGO_PKG_VERSION"))),
            ("command".into(), self.command.into()),
            ("s".into(), s_list),
            ("grid".into(), self.grid.to_string()),
            ("trunc".into(), self.trunc.to_string()),
            ("h".into(), fmt_f64(self.h)),
            ("j".into(), format!("{}..{}", self.j.0, self.j.1)),
            ("dim".into(), self.dim.to_string()),
            ("format".into(), self.format.name().into()),
        ]
    }

    fn truncation(&self) -> Result<TruncationPolicy, CliError> {
        TruncationPolicy::new(self.trunc).map_err(CliError::from)
    }

    fn path(&self, stem: &str) -> PathBuf {
        self.out.join(format!("{stem}.{}", self.format.extension()))
    }

    fn ensure_out_dir(&self) -> Result<(), CliError> {
        std::fs::create_dir_all(&self.out)
            .map_err(|e| CliError::Io(format!("cannot create {}: {e}", self.out.display())))
    }
}

struct Defaults {
    s: &'static [f64],
    grid: usize,
    trunc: usize,
    h: f64,
    j: (usize, usize),
    dim: u8,
}

fn resolve(
    command: &'static str,
    common: &CommonArgs,
    h_flag: Option<f64>,
    j_flag: Option<&str>,
    dim_flag: Option<u8>,
    defaults: &Defaults,
) -> Result<Resolved, CliError> {
    let file = load_file_config(common.config.as_deref())?;
    let s = match (&common.s, &file.s) {
        (Some(text), _) => parse_s_list(text)?,
        (None, Some(list)) => list.clone(),
        (None, None) => defaults.s.to_vec(),
    };
    let j = match (j_flag, &file.j) {
        (Some(text), _) => parse_j_range(text)?,
        (None, Some(text)) => parse_j_range(text)?,
        (None, None) => defaults.j,
    };
    let format = Format::parse(
        common.format.as_deref().or(file.format.as_deref()).unwrap_or("csv"),
    )?;
    let resolved = Resolved {
        command,
        s,
        grid: common.grid.or(file.grid).unwrap_or(defaults.grid),
        trunc: common.trunc.or(file.trunc).unwrap_or(defaults.trunc),
        h: h_flag.or(file.h).unwrap_or(defaults.h),
        j,
        dim: dim_flag.or(file.dim).unwrap_or(defaults.dim),
        out: common.out.clone().or(file.out).unwrap_or_else(|| PathBuf::from("out")),
        format,
    };
    if resolved.grid < 2 {
        return Err(CliError::Config("grid needs at least 2 points".into()));
    }
    if resolved.trunc == 0 {
        return Err(CliError::Config("trunc must be >= 1".into()));
    }
    for (k, v) in resolved.header() {
        println!("# {k}: {v}");
    }
    Ok(resolved)
}

/// File-name tag for a fractional power (shortest round-trip decimal).
fn s_tag(sv: f64) -> String {
    sv.to_string()
}

pub fn constant_rhs(common: &CommonArgs) -> Result<(), CliError> {
    let cfg = resolve(
        "constant-rhs",
        common,
        None,
        None,
        None,
        &Defaults { s: &[0.25, 0.5, 0.75], grid: 1025, trunc: 10_000, h: 2f64.powi(-10), j: (1, 20), dim: 1 },
    )?;
    cfg.ensure_out_dir()?;
    let trunc = cfg.truncation()?;
    let grid = Grid1D::new(cfg.grid)?;
    for s in validated_powers(&cfg.s)? {
        let mut rows = Vec::with_capacity(cfg.grid);
        for x in grid.coords() {
            let r = riesz_constant_rhs(&[x], 1, s)?;
            let u = spectral_constant_rhs_1d(x, s, &trunc)?;
            rows.push(vec![Cell::Num(x), Cell::Num(r), Cell::Num(u)]);
        }
        write_table(
            &cfg.path(&format!("constant_rhs_s{}", s_tag(s.value()))),
            &cfg.header(),
            &["x", "u_riesz", "u_spectral"],
            &rows,
            cfg.format,
        )?;
    }
    // The u(0)-vs-s curve on a fixed s grid.
    let s_grid: Vec<FracPower> =
        (1..100).map(|i| FracPower::new(i as f64 / 100.0).expect("in range")).collect();
    let curve = max_value_curves(&s_grid, &trunc)?;
    let rows: Vec<Vec<Cell>> = curve
        .iter()
        .map(|p| {
            vec![Cell::Num(p.s.value()), Cell::Num(p.riesz_at_zero), Cell::Num(p.spectral_at_zero)]
        })
        .collect();
    write_table(
        &cfg.path("max_value_curve"),
        &cfg.header(),
        &["s", "u_riesz_at_0", "u_spectral_at_0"],
        &rows,
        cfg.format,
    )
}

pub fn boundary_layer(
    common: &CommonArgs,
    table1: bool,
    exponent: bool,
    h: Option<f64>,
    j: Option<&str>,
) -> Result<(), CliError> {
    if table1 && exponent {
        return Err(CliError::Config("--table1 and --exponent are mutually exclusive".into()));
    }
    if exponent {
        let cfg = resolve(
            "boundary-layer",
            common,
            h,
            j,
            None,
            &Defaults { s: &[0.5], grid: 1025, trunc: 1_000_000, h: 1e-6, j: (1, 20), dim: 1 },
        )?;
        cfg.ensure_out_dir()?;
        let trunc = cfg.truncation()?;
        let est = log_exponent_estimate(cfg.h, cfg.j.0, cfg.j.1, &trunc)?;
        let mut header = cfg.header();
        header.push(("median_k".into(), fmt_f64(est.median())));
        let rows: Vec<Vec<Cell>> = est
            .k_values
            .iter()
            .enumerate()
            .map(|(i, &k)| vec![Cell::Int((cfg.j.0 + i) as u64), Cell::Num(k)])
            .collect();
        return write_table(&cfg.path("exponent_kj"), &header, &["j", "k"], &rows, cfg.format);
    }
    let (stem, cfg) = if table1 {
        let mut fixed = common.clone();
        fixed.s = Some("0.25,0.5,0.75".into());
        fixed.trunc = Some(10_000);
        let cfg = resolve(
            "boundary-layer",
            &fixed,
            Some(2f64.powi(-10)),
            Some("1..20"),
            None,
            &Defaults { s: &[0.25, 0.5, 0.75], grid: 1025, trunc: 10_000, h: 2f64.powi(-10), j: (1, 20), dim: 1 },
        )?;
        ("table1", cfg)
    } else {
        let cfg = resolve(
            "boundary-layer",
            common,
            h,
            j,
            None,
            &Defaults { s: &[0.25, 0.5, 0.75], grid: 1025, trunc: 10_000, h: 2f64.powi(-10), j: (1, 20), dim: 1 },
        )?;
        ("ratios", cfg)
    };
    cfg.ensure_out_dir()?;
    let trunc = cfg.truncation()?;
    let powers = validated_powers(&cfg.s)?;
    let rows_data =
        boundary_ratio_table(&powers, cfg.h, cfg.j.0, cfg.j.1, &trunc, TABLE_LOG_MODEL_EXPONENT)?;
    let rows: Vec<Vec<Cell>> = rows_data
        .iter()
        .map(|r| {
            vec![
                Cell::Num(r.s.value()),
                Cell::Text(r.formulation.to_string()),
                Cell::Text(r.model.to_string()),
                Cell::Num(r.min),
                Cell::Num(r.max),
            ]
        })
        .collect();
    write_table(
        &cfg.path(stem),
        &cfg.header(),
        &["s", "formulation", "model", "min", "max"],
        &rows,
        cfg.format,
    )
}

pub fn dirac(common: &CommonArgs, dim: Option<u8>) -> Result<(), CliError> {
    let probe_file = load_file_config(common.config.as_deref())?;
    let dim_resolved = dim.or(probe_file.dim).unwrap_or(1);
    match dim_resolved {
        1 => dirac_1d(common, dim),
        2 => dirac_2d(common, dim),
        other => Err(CliError::Config(format!("dim must be 1 or 2, got {other}"))),
    }
}

fn dirac_1d(common: &CommonArgs, dim: Option<u8>) -> Result<(), CliError> {
    let cfg = resolve(
        "dirac",
        common,
        None,
        None,
        dim,
        &Defaults { s: &[0.25, 0.45, 0.55], grid: 1025, trunc: 10_000, h: 2f64.powi(-10), j: (1, 20), dim: 1 },
    )?;
    cfg.ensure_out_dir()?;
    let trunc = cfg.truncation()?;
    let grid = Grid1D::new(cfg.grid)?;
    for s in validated_powers(&cfg.s)? {
        let mut rows = Vec::with_capacity(cfg.grid);
        for x in grid.coords() {
            // The fundamental solution is singular at the origin.
            let u0 = if x == 0.0 { f64::NAN } else { fundamental_solution(&[x], 1, s)? };
            let u = spectral_dirac_solution_1d(x, s, &trunc)?;
            rows.push(vec![Cell::Num(x), Cell::Num(u0), Cell::Num(u)]);
        }
        write_table(
            &cfg.path(&format!("dirac1d_s{}", s_tag(s.value()))),
            &cfg.header(),
            &["x", "u0_riesz", "u_spectral"],
            &rows,
            cfg.format,
        )?;
    }
    Ok(())
}

fn dirac_2d(common: &CommonArgs, dim: Option<u8>) -> Result<(), CliError> {
    let cfg = resolve(
        "dirac",
        common,
        None,
        None,
        dim,
        &Defaults { s: &[0.5, 0.6, 0.75], grid: 101, trunc: 2048, h: 2f64.powi(-10), j: (1, 20), dim: 2 },
    )?;
    cfg.ensure_out_dir()?;
    let trunc = cfg.truncation()?;
    let grid = Grid1D::new(cfg.grid)?;
    for s in validated_powers(&cfg.s)? {
        let coeffs = lift_coefficients(s, LIFT_COUNT, LIFT_NODES)?;
        let mut rows = Vec::with_capacity(cfg.grid * cfg.grid);
        let mut diff_rows = Vec::with_capacity(cfg.grid * cfg.grid);
        for x in grid.coords() {
            for y in grid.coords() {
                let w = spectral_dirac_2d(x, y, s, &trunc)?;
                let u = spectral_dirac_solution_2d(x, y, s, &trunc, &coeffs)?;
                rows.push(vec![Cell::Num(x), Cell::Num(y), Cell::Num(w), Cell::Num(u)]);
                let u0 = if x == 0.0 && y == 0.0 {
                    f64::NAN
                } else {
                    fundamental_solution(&[x, y], 2, s)?
                };
                diff_rows.push(vec![Cell::Num(x), Cell::Num(y), Cell::Num((u0 - u).abs())]);
            }
        }
        let tag = s_tag(s.value());
        write_table(
            &cfg.path(&format!("dirac2d_s{tag}")),
            &cfg.header(),
            &["x", "y", "w2s", "u_spectral"],
            &rows,
            cfg.format,
        )?;
        write_table(
            &cfg.path(&format!("dirac2d_diff_s{tag}")),
            &cfg.header(),
            &["x", "y", "abs_diff"],
            &diff_rows,
            cfg.format,
        )?;
    }
    Ok(())
}

fn check(name: &str, ok: bool, detail: String) -> Result<(), CliError> {
    if ok {
        println!("selftest: {name}: ok");
        Ok(())
    } else {
        Err(CliError::Accuracy(format!("selftest: {name}: {detail}")))
    }
}

/// Built-in oracle cross-checks; any disagreement exits with code 3.
pub fn selftest() -> Result<(), CliError> {
    // c(1,1/2) = 1 and the half-Laplacian ball solution is sqrt(1 - x^2).
    let half = FracPower::new(0.5).expect("in range");
    let c = riesz_ball_constant(1, half)?;
    check("riesz constant c(1,1/2)", (c - 1.0).abs() < 1e-12, format!("c = {c}"))?;
    let mut worst: f64 = 0.0;
    for i in 0..=100 {
        let x = -1.0 + 0.02 * i as f64;
        let u = riesz_constant_rhs(&[x], 1, half)?;
        worst = worst.max((u - (1.0 - x * x).sqrt()).abs());
    }
    check("riesz half-power profile", worst < 1e-12, format!("sup error {worst}"))?;

    // Quadrature coefficient of f = 1 against e_1 equals 4/pi.
    let nodes = 10_001;
    let rule = QuadratureRule::new(QuadratureKind::Simpson, nodes)?;
    let grid = Grid1D::new(nodes)?;
    let ones = Field::new(
        FieldGrid::Line(grid),
        vec![1.0; nodes],
        Formulation::Spectral,
        TruncationPolicy::new(1)?,
        half,
    )?;
    let c1 = coefficient_oracle(&ones, 1, &rule)?;
    check(
        "quadrature (1, e_1) = 4/pi",
        (c1 - 4.0 / PI).abs() < 1e-10,
        format!("got {c1}, want {}", 4.0 / PI),
    )?;

    // Operator round-trip: applying the operator to the solution coefficients
    // reproduces the truncated Fourier expansion of f = 1.
    let coeffs = fourier_coefficients_constant_rhs(half, 100);
    let x = 0.37;
    let image = apply_spectral_operator(&coeffs, 0.5, x);
    let f_partial: f64 =
        (0..50).map(|m| 4.0 / ((2 * m + 1) as f64 * PI) * ((2 * m + 1) as f64 * PI / 2.0 * (x + 1.0)).sin()).sum();
    check(
        "spectral operator round-trip",
        (image - f_partial).abs() < 1e-12,
        format!("image {image}, partial f {f_partial}"),
    )?;

    // Classical limit: the series at s = 0.999 approaches the Green solutions.
    let s_near = FracPower::new(0.999).expect("in range");
    let trunc = TruncationPolicy::new(100_000)?;
    let mut sup_const: f64 = 0.0;
    let mut sup_dirac: f64 = 0.0;
    for i in 0..=128 {
        let x = -1.0 + i as f64 / 64.0;
        let u = spectral_constant_rhs_1d(x, s_near, &trunc)?;
        sup_const = sup_const.max((u - classical_reference(ClassicalProblem::ConstantRhs1D, x)?).abs());
        let w = fraclap::spectral::spectral_dirac_1d(x, s_near, &trunc)?;
        sup_dirac = sup_dirac.max((w - classical_reference(ClassicalProblem::Dirac1D, x)?).abs());
    }
    check("classical limit f = 1", sup_const <= 5e-3, format!("sup error {sup_const}"))?;
    check("classical limit f = delta", sup_dirac <= 5e-3, format!("sup error {sup_dirac}"))?;

    println!("selftest: all checks passed");
    Ok(())
}
