//! Boundary-layer analysis: ratio tables of the interface-layer steepness,
//! the log-exponent estimator for the `s = 1/2` spectral layer, and the
//! solution-maximum curves.

use crate::domain::{FracPower, TruncationPolicy};
use crate::riesz::riesz_constant_rhs;
use crate::special::riesz_ball_constant;
use crate::spectral::spectral_constant_rhs_1d;
use crate::{Error, Result};

/// Exponent of the `dist |ln dist|^k` model used in the published ratio table.
///
/// The table header quotes 0.85, but recomputing the tabulated `s = 1/2`
/// column shows the printed values were produced with 0.82; this default
/// reproduces the table. The estimator itself yields about 0.86 on the fine
/// grid.
pub const TABLE_LOG_MODEL_EXPONENT: f64 = 0.82;

/// Ratio model dividing the solution by a power of the boundary distance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExponentModel {
    /// `dist^s` (Riesz).
    DistPowS,
    /// `dist^{min(2s,1)}` (spectral).
    DistPowMin2s1,
    /// `dist |ln dist|^k` (spectral, `s = 1/2`).
    DistLogPow(f64),
}

impl std::fmt::Display for ExponentModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExponentModel::DistPowS => write!(f, "dist^s"),
            ExponentModel::DistPowMin2s1 => write!(f, "dist^min(2s,1)"),
            ExponentModel::DistLogPow(k) => write!(f, "dist*|ln dist|^{k}"),
        }
    }
}

/// Formulation tag of a ratio-table row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowFormulation {
    Riesz,
    Spectral,
    SpectralLog,
}

impl std::fmt::Display for RowFormulation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RowFormulation::Riesz => write!(f, "riesz"),
            RowFormulation::Spectral => write!(f, "spectral"),
            RowFormulation::SpectralLog => write!(f, "spectral_log"),
        }
    }
}

/// One row of the boundary-layer ratio table.
#[derive(Debug, Clone, PartialEq)]
pub struct RatioRow {
    pub s: FracPower,
    pub formulation: RowFormulation,
    pub model: ExponentModel,
    pub j_first: usize,
    pub j_last: usize,
    pub h: f64,
    pub min: f64,
    pub max: f64,
}

/// Raw per-point exponent estimates `k_j` for the `s = 1/2` layer.
#[derive(Debug, Clone, PartialEq)]
pub struct ExponentEstimate {
    pub h: f64,
    pub j_first: usize,
    pub j_last: usize,
    pub k_values: Vec<f64>,
    pub trunc: TruncationPolicy,
}

impl ExponentEstimate {
    /// Headline estimate: the median of the raw `k_j`.
    pub fn median(&self) -> f64 {
        let mut v = self.k_values.clone();
        v.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
        let n = v.len();
        if n % 2 == 1 {
            v[n / 2]
        } else {
            0.5 * (v[n / 2 - 1] + v[n / 2])
        }
    }
}

fn check_range(h: f64, j_first: usize, j_last: usize) -> Result<()> {
    if h <= 0.0 || !h.is_finite() {
        return Err(Error::Domain(format!("grid step h = {h} must be positive")));
    }
    if j_first == 0 || j_first > j_last {
        return Err(Error::Domain(format!("invalid index range {j_first}..{j_last}")));
    }
    if j_last as f64 * h >= 2.0 {
        return Err(Error::Domain("index range leaves the interval (j*h must stay < 2)".into()));
    }
    Ok(())
}

fn min_max(values: impl Iterator<Item = f64>) -> (f64, f64) {
    values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)))
}

/// Builds the boundary-layer ratio table: one Riesz and one spectral row per
/// `s`, plus the log-model row for `s = 1/2` with the given exponent.
pub fn boundary_ratio_table(
    s_list: &[FracPower],
    h: f64,
    j_first: usize,
    j_last: usize,
    trunc: &TruncationPolicy,
    log_exponent: f64,
) -> Result<Vec<RatioRow>> {
    check_range(h, j_first, j_last)?;
    let mut rows = Vec::new();
    for &s in s_list {
        let sv = s.value();
        let dists: Vec<f64> = (j_first..=j_last).map(|j| j as f64 * h).collect();
        let riesz: Vec<f64> = dists
            .iter()
            .map(|&d| Ok(riesz_constant_rhs(&[-1.0 + d], 1, s)? / d.powf(sv)))
            .collect::<Result<_>>()?;
        let (min, max) = min_max(riesz.into_iter());
        rows.push(RatioRow {
            s,
            formulation: RowFormulation::Riesz,
            model: ExponentModel::DistPowS,
            j_first,
            j_last,
            h,
            min,
            max,
        });

        let spectral: Vec<f64> = dists
            .iter()
            .map(|&d| {
                Ok(spectral_constant_rhs_1d(-1.0 + d, s, trunc)? / d.powf((2.0 * sv).min(1.0)))
            })
            .collect::<Result<_>>()?;
        let (min, max) = min_max(spectral.into_iter());
        rows.push(RatioRow {
            s,
            formulation: RowFormulation::Spectral,
            model: ExponentModel::DistPowMin2s1,
            j_first,
            j_last,
            h,
            min,
            max,
        });

        if (sv - 0.5).abs() < 1e-12 {
            let logs: Vec<f64> = dists
                .iter()
                .map(|&d| {
                    Ok(spectral_constant_rhs_1d(-1.0 + d, s, trunc)?
                        / (d * d.ln().abs().powf(log_exponent)))
                })
                .collect::<Result<_>>()?;
            let (min, max) = min_max(logs.into_iter());
            rows.push(RatioRow {
                s,
                formulation: RowFormulation::SpectralLog,
                model: ExponentModel::DistLogPow(log_exponent),
                j_first,
                j_last,
                h,
                min,
                max,
            });
        }
    }
    Ok(rows)
}

/// Raw exponent estimates `k_j = ln(u_{1/2}(x_j)/(x_j+1)) / ln|ln(x_j+1)|`
/// at `x_j = -1 + j h` for the spectral `s = 1/2` constant-RHS solution.
pub fn log_exponent_estimate(
    h: f64,
    j_first: usize,
    j_last: usize,
    trunc: &TruncationPolicy,
) -> Result<ExponentEstimate> {
    check_range(h, j_first, j_last)?;
    let s = FracPower::new(0.5).expect("valid");
    let mut k_values = Vec::with_capacity(j_last - j_first + 1);
    for j in j_first..=j_last {
        let d = j as f64 * h;
        if d.ln().abs() <= 1.0 {
            return Err(Error::Domain(format!(
                "grid too coarse: |ln({d})| <= 1 breaks the exponent formula"
            )));
        }
        let u = spectral_constant_rhs_1d(-1.0 + d, s, trunc)?;
        k_values.push((u / d).ln() / d.ln().abs().ln());
    }
    Ok(ExponentEstimate { h, j_first, j_last, k_values, trunc: *trunc })
}

/// One point of the maximum-value curves: the two solution maxima (attained
/// at `x = 0`) as functions of `s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaxValuePoint {
    pub s: FracPower,
    pub riesz_at_zero: f64,
    pub spectral_at_zero: f64,
}

/// `(u_s^R(0), u_s(0)) = (c(1,s), spectral series at 0)` per grid value.
pub fn max_value_curves(
    s_grid: &[FracPower],
    trunc: &TruncationPolicy,
) -> Result<Vec<MaxValuePoint>> {
    s_grid
        .iter()
        .map(|&s| {
            Ok(MaxValuePoint {
                s,
                riesz_at_zero: riesz_ball_constant(1, s)?,
                spectral_at_zero: spectral_constant_rhs_1d(0.0, s, trunc)?,
            })
        })
        .collect()
}
