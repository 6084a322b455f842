//! Population-based divide-and-approximate-conquer: decomposition, the
//! approximate complement search, the generic loop, and the PHC baseline.

mod complement;
mod dac;
mod grouping;
mod observer;
mod phc;
mod population;
mod session;

pub use complement::{approximate_complement, best_complement, ComplementChoice};
pub use dac::{run_dac, SearchOperator};
pub use grouping::{random_grouping, Decomposer, FixedGrouping, RandomGrouping};
pub use observer::{FeLog, GroupStep, MonotonicityAudit, RunObserver, Tee};
pub use phc::run_phc;
pub(crate) use population::finish_run;
pub use population::{DacConfig, Population, RunOutcome};
pub use session::{ConvergenceTrace, RunSession, TracePoint};
