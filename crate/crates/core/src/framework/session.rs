//! Per-run evaluation bookkeeping: FE counter, best-so-far and trace.

use crate::base::{counted_eval, strictly_better, Direction, EvalCounter, FullSolution, Objective};
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TracePoint {
    pub fe: u64,
    pub best_value: f64,
}

/// Best-so-far objective value sampled against FEs consumed.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConvergenceTrace {
    pub points: Vec<TracePoint>,
}

impl ConvergenceTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: &[(u64, f64)]) -> Self {
        Self {
            points: pairs
                .iter()
                .map(|&(fe, best_value)| TracePoint { fe, best_value })
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn last(&self) -> Option<TracePoint> {
        self.points.last().copied()
    }
}

/// Owns everything a single run mutates while evaluating: the counter, the
/// best solution seen so far and the trace.
#[derive(Debug)]
pub struct RunSession {
    counter: EvalCounter,
    direction: Direction,
    log_every: u64,
    best: Option<FullSolution>,
    trace: ConvergenceTrace,
}

impl RunSession {
    pub fn new(budget: u64, direction: Direction, log_every: u64) -> Self {
        Self {
            counter: EvalCounter::new(budget),
            direction,
            log_every: log_every.max(1),
            best: None,
            trace: ConvergenceTrace::new(),
        }
    }

    pub fn counter(&self) -> &EvalCounter {
        &self.counter
    }

    pub fn consumed(&self) -> u64 {
        self.counter.consumed()
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn best(&self) -> Option<&FullSolution> {
        self.best.as_ref()
    }

    pub fn best_value(&self) -> Option<f64> {
        self.best.as_ref().and_then(FullSolution::cached_value)
    }

    /// Metered evaluation of `x` that also maintains best-so-far and the trace.
    pub fn eval<F: Objective + ?Sized>(&mut self, f: &F, x: &mut FullSolution) -> Result<f64> {
        let fresh = x.cached_value().is_none();
        let value = counted_eval(f, x, &mut self.counter)?;
        if fresh {
            let improved = match self.best_value() {
                None => true,
                Some(b) => strictly_better(value, b, self.direction)?,
            };
            if improved {
                self.best = Some(x.clone());
            }
            let fe = self.counter.consumed();
            if fe.is_multiple_of(self.log_every) {
                self.trace.points.push(TracePoint {
                    fe,
                    best_value: self.best_value().expect("set above"),
                });
            }
        }
        Ok(value)
    }

    /// Closes the trace with a point at the final FE count.
    pub fn finish(mut self) -> (Option<FullSolution>, ConvergenceTrace, u64) {
        let fe = self.counter.consumed();
        if let Some(best_value) = self.best_value() {
            if self.trace.last().map(|p| p.fe) != Some(fe) {
                self.trace.points.push(TracePoint { fe, best_value });
            }
        }
        (self.best, self.trace, fe)
    }
}
