//! Benchmark functions, reproducible shifted/permuted instances, and the
//! external-worker objective adapter.

mod external;
mod functions;
mod instance;
pub mod protocol;

pub use external::{ExternalObjective, ExternalObjectiveConfig};
pub use functions::{rosenbrock, schwefel12, sphere};
pub use instance::{make_instance, BenchmarkInstance, BlockKind, FunctionId, InstanceOptions};
