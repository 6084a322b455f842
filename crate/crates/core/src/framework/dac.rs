//! The generic divide-and-approximate-conquer loop.

use crate::base::{better, project, Objective, PartialSolution, ProblemSpec, RngStream};
use crate::error::{Error, Result};
use crate::framework::complement::{best_complement, ComplementChoice};
use crate::framework::grouping::Decomposer;
use crate::framework::observer::{GroupStep, RunObserver};
use crate::framework::population::{finish_run, DacConfig, Population, RunOutcome};
use crate::framework::session::RunSession;

/// Produces a new partial solution from an old one.
pub trait SearchOperator {
    fn propose(
        &mut self,
        partial: &PartialSolution,
        step_size: f64,
        spec: &ProblemSpec,
        rng: &mut RngStream,
    ) -> PartialSolution;

    /// New step size after a success or failure. Default: unchanged.
    fn adapt(&mut self, step_size: f64, _success: bool) -> f64 {
        step_size
    }
}

/// Runs the generic loop with pluggable search and decomposition.
///
/// Per group, all `N` new partials are generated first; then the old and the
/// new partial of every row get their own approximate complement over the
/// population as it stood at the start of the group; finally each row keeps
/// the better of its two candidates together with that candidate's complement.
/// Uncached, that is `2N²` FEs per group; with `incumbent_cache` the old
/// partial's own-row candidate is free, giving `2N² − N`.
pub fn run_dac<F, S, D>(
    f: &F,
    spec: &ProblemSpec,
    cfg: &DacConfig,
    search_op: &mut S,
    decomposer: &mut D,
    observer: &mut dyn RunObserver,
) -> Result<RunOutcome>
where
    F: Objective + ?Sized,
    S: SearchOperator + ?Sized,
    D: Decomposer + ?Sized,
{
    cfg.validate(spec.dimension())?;
    let direction = spec.direction();
    let mut rng = RngStream::new(cfg.seed, "search", 0);
    let mut session = RunSession::new(cfg.budget, direction, cfg.log_every);
    let grouping = decomposer.decompose(spec.dimension(), cfg.groups, &mut rng)?;
    let mut pop = Population::initialize(f, spec, cfg, grouping, &mut rng, &mut session)?;

    let mut iterations = 0;
    let status = (|| -> Result<()> {
        loop {
            if cfg.max_iterations.is_some_and(|cap| iterations >= cap) {
                return Ok(());
            }
            if cfg.regroup_each_iteration && iterations > 0 {
                pop.grouping = decomposer.decompose(spec.dimension(), cfg.groups, &mut rng)?;
            }
            for i in 0..cfg.groups {
                dac_group_step(f, spec, cfg, &mut pop, i, iterations, search_op, &mut rng, &mut session, observer)?;
            }
            iterations += 1;
            observer.iteration_end(iterations, session.consumed());
        }
    })();
    match status {
        Ok(()) | Err(Error::BudgetExhausted { .. }) => Ok(finish_run(session, iterations, pop)),
        Err(e) => Err(e),
    }
}

#[allow(clippy::too_many_arguments)]
fn dac_group_step<F, S>(
    f: &F,
    spec: &ProblemSpec,
    cfg: &DacConfig,
    pop: &mut Population,
    i: usize,
    iteration: u64,
    search_op: &mut S,
    rng: &mut RngStream,
    session: &mut RunSession,
    observer: &mut dyn RunObserver,
) -> Result<()>
where
    F: Objective + ?Sized,
    S: SearchOperator + ?Sized,
{
    let n = pop.len();
    let group = pop.grouping.group(i).to_vec();
    let olds = pop
        .rows
        .iter()
        .map(|row| project(row, &group))
        .collect::<Result<Vec<_>>>()?;
    let news: Vec<PartialSolution> = olds
        .iter()
        .enumerate()
        .map(|(j, old)| search_op.propose(old, pop.step_sizes.sigma(j, i), spec, rng))
        .collect();

    let mut choices: Vec<(ComplementChoice, ComplementChoice)> = Vec::with_capacity(n);
    for j in 0..n {
        let own = cfg.incumbent_cache.then_some(j);
        let old = best_complement(f, &olds[j], &pop.rows, own, session)?;
        let new = best_complement(f, &news[j], &pop.rows, None, session)?;
        choices.push((old, new));
    }

    let direction = spec.direction();
    for (j, (old, new)) in choices.into_iter().enumerate() {
        let success = better(new.value, old.value, direction)?;
        let sigma = search_op.adapt(pop.step_sizes.sigma(j, i), success);
        pop.step_sizes.set_sigma(j, i, sigma);
        let before = pop.rows[j].cached_value().unwrap_or(old.value);
        let winner = if success { new } else { old };
        debug_assert!(
            better(winner.value, before, direction)?,
            "row {j} worsened from {before} to {}",
            winner.value
        );
        observer.group_step(&GroupStep {
            iteration,
            group: i,
            row: j,
            before,
            after: winner.value,
            complement_row: winner.row_index,
            success,
        });
        pop.rows[j] = winner.solution;
    }
    Ok(())
}
