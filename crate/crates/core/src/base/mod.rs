//! Domain types shared by every optimizer: solutions, partitions, metered
//! evaluation and seeded randomness.

mod eval;
mod rng;
mod solution;

pub use eval::{counted_eval, EvalCounter, Objective};
pub use rng::{derive_seed, RngStream, GENERATOR_ID};
pub use solution::{
    better, complement_indices, compose, project, strictly_better, Direction, FullSolution,
    Grouping, PartialSolution, ProblemSpec,
};
