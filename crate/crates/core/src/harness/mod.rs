//! Multi-run experiments, CSV output and CLI plumbing.

mod config;
mod experiment;

pub use config::{parse_config_text, Algorithm, ExperimentConfig, CONFIG_KEYS};
pub use experiment::{
    execute_runs, exit_code, read_trace_csv, run_algorithm, run_experiment, summarize,
    write_runs_csv, write_summary, write_trace_csv, RunRecord, RunStatus, SummaryRow,
    SummaryTable, RUNS_FILE, SUMMARY_FILE,
};
