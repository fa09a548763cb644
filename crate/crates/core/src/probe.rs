//! Divergence and stabilization probes: computational witnesses that the
//! series which are infinite at the origin really do exceed any threshold at
//! finite truncation, and that the convergent ones settle down.

use crate::domain::FracPower;
use crate::sum::KahanSum;

use std::f64::consts::PI;

/// Default cap on the number of scalar series terms a probe may consume.
pub const DEFAULT_TERM_BUDGET: u64 = 100_000_000;

/// Which partial-sum sequence to probe.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProbeSeries {
    /// `w_{1,s}(0) = (2/pi)^{2s} sum (2m+1)^{-2s}`; finite iff `s > 1/2`.
    W1AtZero { s: FracPower },
    /// `w_{2,s}(0,0) = (2/pi)^{2s} sum [(2k+1)^2 + (2m+1)^2]^{-s}`; infinite
    /// for every `s` in `(0,1)`.
    W2AtOrigin { s: FracPower },
    /// `v_N'(0) = sum_{m<N} 1/(2m+1)`; diverges logarithmically.
    VnPrimeAtZero,
}

/// Crossing record for one threshold: the term count at which the partial sums
/// first exceeded it, or `None` if the budget ran out first.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdCrossing {
    pub threshold: f64,
    pub crossed_at: Option<u64>,
}

/// Stabilization summary for convergent cases.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StabilizedValue {
    pub value: f64,
    /// Integral upper bound on the dropped tail.
    pub tail_bound: f64,
    /// Difference between the last two decade checkpoints.
    pub last_decade_delta: f64,
}

/// Partial-sum trajectory of a probe run.
#[derive(Debug, Clone, PartialEq)]
pub struct GrowthReport {
    /// Partial sums sampled at decade term counts (100, 1000, ...).
    pub trajectory: Vec<(u64, f64)>,
    pub crossings: Vec<ThresholdCrossing>,
    pub terms_used: u64,
    pub final_value: f64,
    /// `Some` when the series is a convergent one and a decade comparison was
    /// possible within the budget.
    pub stabilized: Option<StabilizedValue>,
    /// True when the reported sums are certified lower bounds rather than the
    /// exact partial sums (the 2D origin probe groups row tails through a
    /// convexity bound to keep huge budgets tractable; a crossing of the lower
    /// bound implies a crossing of the true partial sums).
    pub value_is_lower_bound: bool,
}

struct CrossingTracker {
    crossings: Vec<ThresholdCrossing>,
}

impl CrossingTracker {
    fn new(thresholds: &[f64]) -> Self {
        Self {
            crossings: thresholds
                .iter()
                .map(|&t| ThresholdCrossing { threshold: t, crossed_at: None })
                .collect(),
        }
    }

    #[inline]
    fn update(&mut self, value: f64, terms: u64) -> bool {
        let mut all = true;
        for c in &mut self.crossings {
            if c.crossed_at.is_none() {
                if value >= c.threshold {
                    c.crossed_at = Some(terms);
                } else {
                    all = false;
                }
            }
        }
        all
    }
}

/// Runs a probe: accumulates partial sums until every threshold is crossed or
/// the term budget is exhausted.
pub fn divergence_probe(series: ProbeSeries, thresholds: &[f64], budget: u64) -> GrowthReport {
    match series {
        ProbeSeries::W1AtZero { s } => scalar_probe(
            thresholds,
            budget,
            (2.0 / PI).powf(2.0 * s.value()),
            move |m| ((2 * m + 1) as f64).powf(-2.0 * s.value()),
            if s.above_half() {
                // integral tail bound of sum_{m >= M} (2m+1)^{-2s}
                Some(Box::new(move |m_next: u64| {
                    let p = 2.0 * s.value();
                    (2.0 / PI).powf(p) * (2.0 * m_next as f64).powf(1.0 - p) / (2.0 * (p - 1.0))
                }) as Box<dyn Fn(u64) -> f64>)
            } else {
                None
            },
        ),
        ProbeSeries::VnPrimeAtZero => {
            scalar_probe(thresholds, budget, 1.0, |m| 1.0 / (2 * m + 1) as f64, None)
        }
        ProbeSeries::W2AtOrigin { s } => origin_probe_2d(s, thresholds, budget),
    }
}

fn scalar_probe(
    thresholds: &[f64],
    budget: u64,
    front: f64,
    term: impl Fn(u64) -> f64,
    tail_bound: Option<Box<dyn Fn(u64) -> f64>>,
) -> GrowthReport {
    let mut tracker = CrossingTracker::new(thresholds);
    let mut sum = KahanSum::new();
    let mut trajectory = Vec::new();
    let mut checkpoint = 100u64;
    let mut m = 0u64;
    let mut all_crossed = thresholds.is_empty();
    while m < budget {
        sum.add(term(m));
        m += 1;
        let value = front * sum.value();
        if !all_crossed {
            all_crossed = tracker.update(value, m);
        }
        if m == checkpoint {
            trajectory.push((m, value));
            checkpoint *= 10;
        }
        if all_crossed && tail_bound.is_none() {
            break;
        }
    }
    let final_value = front * sum.value();
    let stabilized = tail_bound.map(|bound| {
        let last_decade_delta = match trajectory.len() {
            0 | 1 => f64::NAN,
            n => trajectory[n - 1].1 - trajectory[n - 2].1,
        };
        StabilizedValue { value: final_value, tail_bound: bound(m), last_decade_delta }
    });
    GrowthReport {
        trajectory,
        crossings: tracker.crossings,
        terms_used: m,
        final_value,
        stabilized,
        value_is_lower_bound: false,
    }
}

/// Row prefix that is always summed term by term before grouping starts.
const ROW_EXACT_PREFIX: u64 = 512;
/// Group length of the convexity-bounded row tail.
const ROW_GROUP: u64 = 64;

/// Lower bound on `sum_{m=lo}^{hi} (a_sq + (2m+1)^2)^{-s}` for one group,
/// via Jensen: the map `t -> t^{-s}` is convex, so the group mean of `t`
/// evaluated once underestimates the mean of `t^{-s}`.
#[inline]
fn group_lower_bound(a_sq: f64, s: f64, lo: u64, hi: u64) -> f64 {
    let g = (hi - lo + 1) as f64;
    let b0 = (2 * lo + 1) as f64;
    // mean of (b0 + 2i)^2 over i = 0..g-1
    let mean_b_sq = b0 * b0 + 2.0 * b0 * (g - 1.0) + 2.0 * (g - 1.0) * (2.0 * g - 1.0) / 3.0;
    g * (a_sq + mean_b_sq).powf(-s)
}

/// Lower bound on the row sum `sum_{m=0}^{len-1} (a_sq + (2m+1)^2)^{-s}`:
/// exact prefix, grouped tail.
fn row_sum_lower(a_sq: f64, s: f64, len: u64) -> f64 {
    let mut sum = 0.0;
    let exact = len.min(ROW_EXACT_PREFIX);
    for m in 0..exact {
        let b = (2 * m + 1) as f64;
        sum += (a_sq + b * b).powf(-s);
    }
    let mut lo = exact;
    while lo < len {
        let hi = (lo + ROW_GROUP - 1).min(len - 1);
        sum += group_lower_bound(a_sq, s, lo, hi);
        lo = hi + 1;
    }
    sum
}

/// Probe of `w_{2,s}(0,0)` over expanding index squares. The square of side
/// `k+1` is grown one L-shaped layer at a time; within a layer the index-swap
/// symmetry halves the work and long row tails are certified from below by
/// [`group_lower_bound`]. Budget accounting charges every represented lattice
/// term.
fn origin_probe_2d(s: FracPower, thresholds: &[f64], budget: u64) -> GrowthReport {
    let sv = s.value();
    let front = (2.0 / PI).powf(2.0 * sv);
    let mut tracker = CrossingTracker::new(thresholds);
    let mut sum = KahanSum::new();
    let mut trajectory = Vec::new();
    let mut checkpoint = 100u64;
    let mut terms = 0u64;
    let mut k = 0u64;
    let mut all_crossed = thresholds.is_empty();
    while terms < budget && !all_crossed {
        let a = (2 * k + 1) as f64;
        let a_sq = a * a;
        // L-shaped layer: cells (k, m<k) and (m<k, k) are equal, plus (k, k).
        let layer = 2.0 * row_sum_lower(a_sq, sv, k) + (a_sq + a_sq).powf(-sv);
        sum.add(layer);
        terms += 2 * k + 1;
        k += 1;
        let value = front * sum.value();
        all_crossed = tracker.update(value, terms);
        while terms >= checkpoint {
            trajectory.push((checkpoint, value));
            checkpoint *= 10;
        }
    }
    GrowthReport {
        trajectory,
        crossings: tracker.crossings,
        terms_used: terms,
        final_value: front * sum.value(),
        stabilized: None,
        value_is_lower_bound: true,
    }
}
