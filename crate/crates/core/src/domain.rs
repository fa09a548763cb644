//! Domain types shared by every module: the validated fractional power,
//! truncation policies for the infinite series, uniform grids and evaluated
//! fields.

use crate::{Error, Result};

/// Validated fractional exponent `s` in `(0,1)`.
///
/// The series evaluators additionally accept the classical limit `s = 1`
/// (constructed via [`FracPower::classical_limit`]) so the oracle tests can
/// compare against the non-fractional Green functions; such a value still
/// reports itself as outside the fractional range.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FracPower(f64);

impl FracPower {
    pub fn new(s: f64) -> Result<Self> {
        if !s.is_finite() || s <= 0.0 || s >= 1.0 {
            return Err(Error::Domain(format!("fractional power s must lie in (0,1), got {s}")));
        }
        Ok(Self(s))
    }

    /// The classical limit `s = 1`, admitted only for oracle comparisons.
    pub fn classical_limit() -> Self {
        Self(1.0)
    }

    /// Admits `(0, 1]`; used where the contract allows the classical limit.
    pub fn new_with_limit(s: f64) -> Result<Self> {
        if !s.is_finite() || s <= 0.0 || s > 1.0 {
            return Err(Error::Domain(format!("fractional power s must lie in (0,1], got {s}")));
        }
        Ok(Self(s))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_fractional(self) -> bool {
        self.0 < 1.0
    }

    pub fn above_quarter(self) -> bool {
        self.0 > 0.25
    }

    pub fn above_half(self) -> bool {
        self.0 > 0.5
    }

    pub fn above_three_quarters(self) -> bool {
        self.0 > 0.75
    }
}

/// Summation order / compensation strategy for series accumulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Accumulation {
    /// Plain ascending-index summation; kept as the oracle comparison path.
    Ascending,
    /// Kahan-compensated summation. Sums of `1e6` slowly decaying terms lose
    /// about four digits under plain accumulation, so this is the default.
    #[default]
    Compensated,
}

/// Series cut-off plus accumulation strategy; governs every infinite sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationPolicy {
    /// Number of retained terms per series dimension (`m = 0..max_index-1`).
    pub max_index: usize,
    pub accumulation: Accumulation,
    /// Rigorous upper bound on the dropped tail, when known.
    pub tail_estimate: Option<f64>,
}

impl TruncationPolicy {
    pub fn new(max_index: usize) -> Result<Self> {
        if max_index == 0 {
            return Err(Error::Domain("truncation max_index must be >= 1".into()));
        }
        Ok(Self { max_index, accumulation: Accumulation::Compensated, tail_estimate: None })
    }

    pub fn with_accumulation(mut self, accumulation: Accumulation) -> Self {
        self.accumulation = accumulation;
        self
    }

    /// Default for the 1D solution profiles: `10^4` terms.
    pub fn profile_default() -> Self {
        Self::new(10_000).expect("nonzero")
    }

    /// Default for the boundary-layer exponent study: `10^6` terms.
    pub fn boundary_study() -> Self {
        Self::new(1_000_000).expect("nonzero")
    }

    /// Default per-index truncation for the 2D series.
    pub fn planar_default() -> Self {
        Self::new(2048).expect("nonzero")
    }
}

/// Uniform sampling of `[-1, 1]`, endpoints included.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Grid1D {
    pub points: usize,
}

impl Grid1D {
    pub fn new(points: usize) -> Result<Self> {
        if points < 2 {
            return Err(Error::Domain("a 1D grid needs at least 2 points".into()));
        }
        Ok(Self { points })
    }

    pub fn coord(&self, i: usize) -> f64 {
        -1.0 + 2.0 * i as f64 / (self.points - 1) as f64
    }

    pub fn coords(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.points).map(move |i| self.coord(i))
    }

    pub fn step(&self) -> f64 {
        2.0 / (self.points - 1) as f64
    }
}

/// Uniform sampling of `[-1, 1]^2`, boundary included.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Grid2D {
    pub points_per_axis: usize,
}

impl Grid2D {
    pub fn new(points_per_axis: usize) -> Result<Self> {
        if points_per_axis < 2 {
            return Err(Error::Domain("a 2D grid needs at least 2 points per axis".into()));
        }
        Ok(Self { points_per_axis })
    }

    pub fn coord(&self, i: usize) -> f64 {
        -1.0 + 2.0 * i as f64 / (self.points_per_axis - 1) as f64
    }

    pub fn step(&self) -> f64 {
        2.0 / (self.points_per_axis - 1) as f64
    }

    pub fn point_count(&self) -> usize {
        self.points_per_axis * self.points_per_axis
    }
}

/// Which problem formulation produced a set of samples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Formulation {
    Riesz,
    Spectral,
}

impl std::fmt::Display for Formulation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Formulation::Riesz => write!(f, "riesz"),
            Formulation::Spectral => write!(f, "spectral"),
        }
    }
}

/// Grid descriptor of a [`Field`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FieldGrid {
    Line(Grid1D),
    Plane(Grid2D),
}

/// Evaluated solution samples bound to a grid, formulation tag and the
/// truncation that produced them. 2D values are stored row-major, `y` fastest.
#[derive(Debug, Clone, PartialEq)]
pub struct Field {
    pub grid: FieldGrid,
    pub values: Vec<f64>,
    pub formulation: Formulation,
    pub truncation: TruncationPolicy,
    pub s: FracPower,
}

impl Field {
    pub fn new(
        grid: FieldGrid,
        values: Vec<f64>,
        formulation: Formulation,
        truncation: TruncationPolicy,
        s: FracPower,
    ) -> Result<Self> {
        let expected = match grid {
            FieldGrid::Line(g) => g.points,
            FieldGrid::Plane(g) => g.point_count(),
        };
        if values.len() != expected {
            return Err(Error::Domain(format!(
                "field has {} values but the grid carries {} points",
                values.len(),
                expected
            )));
        }
        Ok(Self { grid, values, formulation, truncation, s })
    }
}
