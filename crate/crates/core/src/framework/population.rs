use crate::base::{FullSolution, Grouping, Objective, ProblemSpec, RngStream};
use crate::dachc::HcState;
use crate::error::{Error, Result};
use crate::framework::session::{ConvergenceTrace, RunSession};

/// Run configuration shared by DAC, DAC-HC and PHC.
#[derive(Debug, Clone, PartialEq)]
pub struct DacConfig {
    /// Number of solutions `N`.
    pub population_size: usize,
    /// Number of sub-problems `M`.
    pub groups: usize,
    /// Hard FE cap.
    pub budget: u64,
    /// Redraw the grouping every iteration instead of once at the start.
    pub regroup_each_iteration: bool,
    pub seed: u64,
    /// Optional iteration cap on top of the budget.
    pub max_iterations: Option<u64>,
    /// Trace sampling interval in FEs.
    pub log_every: u64,
    /// Reuse each row's cached value as its own-complement candidate.
    /// Only the generic DAC loop honours this; hill climbers always cache.
    pub incumbent_cache: bool,
}

impl Default for DacConfig {
    fn default() -> Self {
        Self {
            population_size: 2,
            groups: 10,
            budget: 200_000,
            regroup_each_iteration: true,
            seed: 0,
            max_iterations: None,
            log_every: 1,
            incumbent_cache: true,
        }
    }
}

impl DacConfig {
    pub fn validate(&self, dimension: usize) -> Result<()> {
        if self.population_size == 0 {
            return Err(Error::InvalidConfig("population size N must be >= 1".into()));
        }
        if self.groups == 0 || self.groups > dimension {
            return Err(Error::InvalidGroupCount {
                groups: self.groups,
                dimension,
            });
        }
        if self.budget < self.population_size as u64 {
            return Err(Error::InvalidConfig(format!(
                "budget {} cannot cover {} initial evaluations",
                self.budget, self.population_size
            )));
        }
        if self.log_every == 0 {
            return Err(Error::InvalidConfig("log_every must be >= 1".into()));
        }
        Ok(())
    }
}

/// `N` full solutions, their per-slot step sizes and the current grouping.
#[derive(Debug, Clone)]
pub struct Population {
    pub rows: Vec<FullSolution>,
    pub step_sizes: HcState,
    pub grouping: Grouping,
}

impl Population {
    /// Uniform initialization over the bounds; every row is evaluated once.
    pub(crate) fn initialize<F: Objective + ?Sized>(
        f: &F,
        spec: &ProblemSpec,
        cfg: &DacConfig,
        grouping: Grouping,
        rng: &mut RngStream,
        session: &mut RunSession,
    ) -> Result<Self> {
        let mut rows = Vec::with_capacity(cfg.population_size);
        for _ in 0..cfg.population_size {
            let values = spec
                .bounds()
                .iter()
                .map(|&(lo, hi)| rng.uniform(lo, hi))
                .collect();
            let mut row = FullSolution::new(values);
            session.eval(f, &mut row)?;
            rows.push(row);
        }
        Ok(Self {
            rows,
            step_sizes: HcState::new(cfg.population_size, cfg.groups, spec.dimension()),
            grouping,
        })
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Cached values of all rows, in row order.
    pub fn values(&self) -> Vec<Option<f64>> {
        self.rows.iter().map(FullSolution::cached_value).collect()
    }
}

/// Result of one optimization run.
#[derive(Debug, Clone)]
pub struct RunOutcome {
    pub best: FullSolution,
    pub trace: ConvergenceTrace,
    pub consumed: u64,
    /// Number of fully completed iterations.
    pub iterations: u64,
    pub population: Population,
}

impl RunOutcome {
    pub fn best_value(&self) -> f64 {
        self.best.cached_value().expect("best solution is always evaluated")
    }
}

pub(crate) fn finish_run(
    session: RunSession,
    iterations: u64,
    population: Population,
) -> RunOutcome {
    let (best, trace, consumed) = session.finish();
    RunOutcome {
        best: best.expect("initialization evaluates at least one row"),
        trace,
        consumed,
        iterations,
        population,
    }
}
