//! DAC-HC: `N` hill climbers with Gaussian mutation and 1/5-success-rule
//! step sizes, a fresh random grouping every iteration, and one approximate
//! complement shared by each old/new partial pair.
//!
//! Per (group, row) the old partial's complement costs `N − 1` FEs (the row's
//! own combination is cached) and the mutant costs one more, so every full
//! iteration consumes exactly `M·N²` FEs.

use crate::base::{
    better, project, Objective, PartialSolution, ProblemSpec, RngStream,
};
use crate::error::{Error, Result};
use crate::framework::{
    best_complement, random_grouping, ComplementChoice, DacConfig, GroupStep, Population,
    RunObserver, RunOutcome, RunSession, SearchOperator,
};

pub const SIGMA_INITIAL: f64 = 1.0;
pub const SIGMA_MIN: f64 = 1e-12;
pub const SIGMA_MAX: f64 = 1e4;
/// Target success rate of the step-size rule.
pub const TARGET_SUCCESS: f64 = 0.2;

/// Per-(row, group slot) step sizes plus the adaptation rate `1/√(D+1)`.
///
/// Slots are indexed by group position, not by the dimensions a group holds,
/// so a slot's step size carries over when the grouping is redrawn.
#[derive(Debug, Clone, PartialEq)]
pub struct HcState {
    rows: usize,
    slots: usize,
    sigma: Vec<f64>,
    tau: f64,
}

impl HcState {
    pub fn new(rows: usize, slots: usize, dimension: usize) -> Self {
        Self {
            rows,
            slots,
            sigma: vec![SIGMA_INITIAL; rows * slots],
            tau: 1.0 / ((dimension + 1) as f64).sqrt(),
        }
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn sigma(&self, row: usize, slot: usize) -> f64 {
        self.sigma[row * self.slots + slot]
    }

    pub fn set_sigma(&mut self, row: usize, slot: usize, value: f64) {
        self.sigma[row * self.slots + slot] = value.clamp(SIGMA_MIN, SIGMA_MAX);
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn slots(&self) -> usize {
        self.slots
    }

    pub fn all(&self) -> &[f64] {
        &self.sigma
    }
}

/// Adds independent `N(0, sigma²)` noise to every coordinate, then clamps
/// each coordinate back into its bounds.
pub fn gaussian_mutation(
    partial: &PartialSolution,
    sigma: f64,
    spec: &ProblemSpec,
    rng: &mut RngStream,
) -> PartialSolution {
    let mut out = partial.clone();
    let bounds = spec.bounds();
    for (v, &k) in out.values_mut().iter_mut().zip(partial.indices()) {
        let (lo, hi) = bounds[k];
        *v = (*v + sigma * rng.standard_normal()).clamp(lo, hi);
    }
    out
}

/// `sigma · exp(tau · (1[success] − 1/5))`, clamped to `[SIGMA_MIN, SIGMA_MAX]`.
pub fn update_step_size(sigma: f64, success: bool, tau: f64) -> f64 {
    let indicator = if success { 1.0 } else { 0.0 };
    (sigma * (tau * (indicator - TARGET_SUCCESS)).exp()).clamp(SIGMA_MIN, SIGMA_MAX)
}

/// Gaussian mutation with 1/5-rule adaptation, for use with the generic loop.
#[derive(Debug, Clone, Copy)]
pub struct GaussianOperator {
    pub tau: f64,
}

impl GaussianOperator {
    pub fn for_dimension(dimension: usize) -> Self {
        Self {
            tau: 1.0 / ((dimension + 1) as f64).sqrt(),
        }
    }
}

impl SearchOperator for GaussianOperator {
    fn propose(
        &mut self,
        partial: &PartialSolution,
        step_size: f64,
        spec: &ProblemSpec,
        rng: &mut RngStream,
    ) -> PartialSolution {
        gaussian_mutation(partial, step_size, spec, rng)
    }

    fn adapt(&mut self, step_size: f64, success: bool) -> f64 {
        update_step_size(step_size, success, self.tau)
    }
}

/// Where a hill climber's partial solution takes its complement from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplementPolicy {
    /// Best remainder over all population rows.
    CrossRow,
    /// The row's own remainder (PHC).
    OwnRow,
}

/// DAC-HC with cross-row approximate complements.
pub fn run_dachc<F: Objective + ?Sized>(
    f: &F,
    spec: &ProblemSpec,
    cfg: &DacConfig,
    observer: &mut dyn RunObserver,
) -> Result<RunOutcome> {
    run_hill_climbers(f, spec, cfg, ComplementPolicy::CrossRow, observer)
}

/// Shared engine behind DAC-HC and PHC.
pub fn run_hill_climbers<F: Objective + ?Sized>(
    f: &F,
    spec: &ProblemSpec,
    cfg: &DacConfig,
    policy: ComplementPolicy,
    observer: &mut dyn RunObserver,
) -> Result<RunOutcome> {
    let dimension = spec.dimension();
    cfg.validate(dimension)?;
    let mut rng = RngStream::new(cfg.seed, "search", 0);
    let mut session = RunSession::new(cfg.budget, spec.direction(), cfg.log_every);
    let grouping = random_grouping(dimension, cfg.groups, &mut rng)?;
    let mut pop = Population::initialize(f, spec, cfg, grouping, &mut rng, &mut session)?;

    let mut iterations = 0;
    let status = (|| -> Result<()> {
        loop {
            if cfg.max_iterations.is_some_and(|cap| iterations >= cap) {
                return Ok(());
            }
            if cfg.regroup_each_iteration && iterations > 0 {
                pop.grouping = random_grouping(dimension, cfg.groups, &mut rng)?;
            }
            for i in 0..cfg.groups {
                for j in 0..pop.len() {
                    climb_step(f, spec, &mut pop, i, j, iterations, policy, &mut rng, &mut session, observer)?;
                }
            }
            iterations += 1;
            observer.iteration_end(iterations, session.consumed());
        }
    })();
    match status {
        Ok(()) | Err(Error::BudgetExhausted { .. }) => {
            Ok(crate::framework::finish_run(session, iterations, pop))
        }
        Err(e) => Err(e),
    }
}

#[allow(clippy::too_many_arguments)]
fn climb_step<F: Objective + ?Sized>(
    f: &F,
    spec: &ProblemSpec,
    pop: &mut Population,
    i: usize,
    j: usize,
    iteration: u64,
    policy: ComplementPolicy,
    rng: &mut RngStream,
    session: &mut RunSession,
    observer: &mut dyn RunObserver,
) -> Result<()> {
    let direction = spec.direction();
    let group = pop.grouping.group(i);
    let old = project(&pop.rows[j], group)?;
    let sigma = pop.step_sizes.sigma(j, i);
    let mutant = gaussian_mutation(&old, sigma, spec, rng);

    let before = pop.rows[j]
        .cached_value()
        .expect("rows keep their composed value cached");
    let shared: ComplementChoice = match policy {
        ComplementPolicy::CrossRow => best_complement(f, &old, &pop.rows, Some(j), session)?,
        ComplementPolicy::OwnRow => ComplementChoice {
            row_index: j,
            value: before,
            fresh_evals: 0,
            solution: pop.rows[j].clone(),
        },
    };

    let mut candidate = pop.rows[shared.row_index].splice(&mutant)?;
    let candidate_value = session.eval(f, &mut candidate)?;
    let success = better(candidate_value, shared.value, direction)?;
    pop.step_sizes
        .set_sigma(j, i, update_step_size(sigma, success, pop.step_sizes.tau()));

    let (after, complement_row) = (
        if success { candidate_value } else { shared.value },
        shared.row_index,
    );
    debug_assert!(
        better(after, before, direction)?,
        "row {j} worsened from {before} to {after}"
    );
    pop.rows[j] = if success { candidate } else { shared.solution };
    observer.group_step(&GroupStep {
        iteration,
        group: i,
        row: j,
        before,
        after,
        complement_row,
        success,
    });
    Ok(())
}
