//! Derivative-free optimization by divide and approximate conquer.
//!
//! A problem is split into sub-problems over disjoint coordinate groups. A
//! partial solution on one group is scored by completing it with the best
//! remainder found among the current population rows (its approximate
//! complement) instead of searching the whole remaining space. DAC-HC runs
//! `N` hill climbers this way under a per-iteration random grouping.
//!
//! Modules:
//! - [`base`]: solutions, partitions, FE-metered evaluation, seeded RNG.
//! - [`objectives`]: benchmark functions and instances, external workers.
//! - [`framework`]: the generic loop, complement search, PHC baseline.
//! - [`dachc`]: the hill-climbing instantiation.
//! - [`analysis`]: brute-force oracles and diagnostics.
//! - [`harness`]: multi-run experiments, CSV output, CLI plumbing.

pub mod analysis;
pub mod base;
pub mod dachc;
mod error;
pub mod framework;
pub mod harness;
pub mod objectives;
pub mod par;

pub use error::{Error, Result};

/// Shortest decimal text that parses back to the same `f64`.
pub fn fmt_real(v: f64) -> String {
    format!("{v:?}")
}
