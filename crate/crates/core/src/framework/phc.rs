use crate::base::{Objective, ProblemSpec};
use crate::dachc::{run_hill_climbers, ComplementPolicy};
use crate::error::Result;
use crate::framework::observer::RunObserver;
use crate::framework::population::{DacConfig, RunOutcome};

/// Parallel hill climbing: the DAC-HC loop with every partial completed by
/// its own row's remainder. One fresh FE per row per group.
pub fn run_phc<F: Objective + ?Sized>(
    f: &F,
    spec: &ProblemSpec,
    cfg: &DacConfig,
    observer: &mut dyn RunObserver,
) -> Result<RunOutcome> {
    run_hill_climbers(f, spec, cfg, ComplementPolicy::OwnRow, observer)
}
