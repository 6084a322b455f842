//! FE-metered evaluation.

use crate::base::solution::FullSolution;
use crate::error::{Error, Result};

/// A black-box objective. Implementations must be pure in `x`.
pub trait Objective: Sync {
    fn evaluate(&self, x: &[f64]) -> Result<f64>;
}

impl<F> Objective for F
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    fn evaluate(&self, x: &[f64]) -> Result<f64> {
        Ok(self(x))
    }
}

/// Counts fresh objective evaluations against a hard budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalCounter {
    consumed: u64,
    budget: u64,
}

impl EvalCounter {
    pub fn new(budget: u64) -> Self {
        Self { consumed: 0, budget }
    }

    pub fn consumed(&self) -> u64 {
        self.consumed
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }

    pub fn remaining(&self) -> u64 {
        self.budget - self.consumed
    }

    pub fn is_exhausted(&self) -> bool {
        self.consumed >= self.budget
    }
}

/// Evaluates `x`, charging one FE unless its cached value is present.
///
/// NaN results are an error and are never cached.
pub fn counted_eval<F: Objective + ?Sized>(
    f: &F,
    x: &mut FullSolution,
    counter: &mut EvalCounter,
) -> Result<f64> {
    if let Some(v) = x.cached_value() {
        return Ok(v);
    }
    if counter.is_exhausted() {
        return Err(Error::BudgetExhausted {
            budget: counter.budget,
        });
    }
    let value = f.evaluate(x.values())?;
    counter.consumed += 1;
    if value.is_nan() {
        return Err(Error::NonFiniteValue);
    }
    x.set_cached(value);
    Ok(value)
}
