//! Kahan-compensated accumulator for the slowly convergent series.

use crate::domain::Accumulation;

/// Running sum with Neumaier's variant of Kahan compensation.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    compensation: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, term: f64) {
        let t = self.sum + term;
        if self.sum.abs() >= term.abs() {
            self.compensation += (self.sum - t) + term;
        } else {
            self.compensation += (term - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// Accumulator that honors the configured [`Accumulation`] strategy.
#[derive(Debug, Clone, Copy)]
pub enum Accumulator {
    Plain(f64),
    Compensated(KahanSum),
}

impl Accumulator {
    pub fn new(strategy: Accumulation) -> Self {
        match strategy {
            Accumulation::Ascending => Accumulator::Plain(0.0),
            Accumulation::Compensated => Accumulator::Compensated(KahanSum::new()),
        }
    }

    #[inline]
    pub fn add(&mut self, term: f64) {
        match self {
            Accumulator::Plain(s) => *s += term,
            Accumulator::Compensated(k) => k.add(term),
        }
    }

    #[inline]
    pub fn value(&self) -> f64 {
        match self {
            Accumulator::Plain(s) => *s,
            Accumulator::Compensated(k) => k.value(),
        }
    }
}
