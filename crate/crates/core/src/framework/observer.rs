//! Hooks for instrumenting runs without touching the algorithms.

use crate::base::{better, Direction};

/// One row's passage through one group step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupStep {
    pub iteration: u64,
    pub group: usize,
    pub row: usize,
    /// Row's composed value before the step.
    pub before: f64,
    /// Row's composed value after selection and complement installation.
    pub after: f64,
    /// Population row that supplied the winning complement.
    pub complement_row: usize,
    pub success: bool,
}

pub trait RunObserver {
    fn group_step(&mut self, _step: &GroupStep) {}

    /// Called after every complete iteration with the FEs consumed so far.
    fn iteration_end(&mut self, _iteration: u64, _consumed: u64) {}
}

impl RunObserver for () {}

/// Counts group steps whose row value got worse.
#[derive(Debug, Clone, Default)]
pub struct MonotonicityAudit {
    pub direction: Direction,
    pub steps: u64,
    pub violations: u64,
}

impl MonotonicityAudit {
    pub fn new(direction: Direction) -> Self {
        Self {
            direction,
            ..Self::default()
        }
    }
}

impl RunObserver for MonotonicityAudit {
    fn group_step(&mut self, step: &GroupStep) {
        self.steps += 1;
        if !better(step.after, step.before, self.direction).unwrap_or(false) {
            self.violations += 1;
        }
    }
}

/// Records consumed FEs at the end of every iteration.
#[derive(Debug, Clone, Default)]
pub struct FeLog {
    pub after_iteration: Vec<u64>,
}

impl RunObserver for FeLog {
    fn iteration_end(&mut self, _iteration: u64, consumed: u64) {
        self.after_iteration.push(consumed);
    }
}

/// Fans out to several observers.
pub struct Tee<'a>(pub Vec<&'a mut dyn RunObserver>);

impl RunObserver for Tee<'_> {
    fn group_step(&mut self, step: &GroupStep) {
        for o in &mut self.0 {
            o.group_step(step);
        }
    }

    fn iteration_end(&mut self, iteration: u64, consumed: u64) {
        for o in &mut self.0 {
            o.iteration_end(iteration, consumed);
        }
    }
}
