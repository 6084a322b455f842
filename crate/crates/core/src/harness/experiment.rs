use std::fs::{self, File};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use crate::base::{derive_seed, Objective, ProblemSpec};
use crate::dachc::{run_dachc, GaussianOperator};
use crate::error::{Error, Result};
use crate::fmt_real;
use crate::framework::{run_dac, run_phc, ConvergenceTrace, RandomGrouping, RunObserver, RunOutcome};
use crate::harness::config::{Algorithm, ExperimentConfig};
use crate::objectives::make_instance;
use crate::par::{map_indexed, ExecMode};

pub const SUMMARY_FILE: &str = "summary.csv";
pub const RUNS_FILE: &str = "runs.csv";

#[derive(Debug, Clone, PartialEq)]
pub enum RunStatus {
    Ok,
    Failed(String),
}

#[derive(Debug, Clone)]
pub struct RunRecord {
    pub run_index: usize,
    pub seed: u64,
    pub status: RunStatus,
    /// `None` when the run failed.
    pub final_value: Option<f64>,
    pub consumed: u64,
    pub wall_time: Duration,
    pub trace_path: PathBuf,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub algorithm: Algorithm,
    pub function: String,
    pub dimension: usize,
    pub group_size: usize,
    pub population_size: usize,
    pub groups: usize,
    pub budget: u64,
    pub runs: usize,
    pub mean: f64,
    /// Unbiased standard deviation; absent for fewer than two values.
    pub std: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct SummaryTable {
    pub rows: Vec<SummaryRow>,
}

/// Maps an error to the process exit code: 2 for usage, 3 otherwise.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Usage(_) => 2,
        _ => 3,
    }
}

/// Dispatches one run of `algorithm`.
pub fn run_algorithm<F: Objective + ?Sized>(
    algorithm: Algorithm,
    f: &F,
    spec: &ProblemSpec,
    cfg: &crate::framework::DacConfig,
    observer: &mut dyn RunObserver,
) -> Result<RunOutcome> {
    match algorithm {
        Algorithm::DacHc => run_dachc(f, spec, cfg, observer),
        Algorithm::Phc => run_phc(f, spec, cfg, observer),
        Algorithm::DacGeneric => {
            let mut op = GaussianOperator::for_dimension(spec.dimension());
            run_dac(f, spec, cfg, &mut op, &mut RandomGrouping, observer)
        }
    }
}

/// Mean and unbiased std of `finals`.
pub fn summarize(finals: &[f64]) -> (f64, Option<f64>) {
    let n = finals.len();
    if n == 0 {
        return (f64::NAN, None);
    }
    let mean = finals.iter().sum::<f64>() / n as f64;
    let std = (n >= 2).then(|| {
        let ss: f64 = finals.iter().map(|v| (v - mean).powi(2)).sum();
        (ss / (n - 1) as f64).sqrt()
    });
    (mean, std)
}

pub fn write_trace_csv(trace: &ConvergenceTrace, run_index: usize, path: &Path) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "run,fe,best_value")?;
    for p in &trace.points {
        writeln!(w, "{run_index},{},{}", p.fe, fmt_real(p.best_value))?;
    }
    w.flush()?;
    Ok(())
}

/// Reads a trace CSV back; all rows must belong to one run.
pub fn read_trace_csv(path: &Path) -> Result<ConvergenceTrace> {
    let reader = BufReader::new(File::open(path)?);
    let mut pairs = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        if lineno == 0 {
            if line.trim() != "run,fe,best_value" {
                return Err(Error::InvalidConfig(format!("{}: bad trace header", path.display())));
            }
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        let bad = || Error::InvalidConfig(format!("{}: line {}: malformed", path.display(), lineno + 1));
        let mut cols = line.split(',');
        let (_run, fe, value) = (cols.next(), cols.next(), cols.next());
        let fe: u64 = fe.and_then(|s| s.trim().parse().ok()).ok_or_else(bad)?;
        let value: f64 = value.and_then(|s| s.trim().parse().ok()).ok_or_else(bad)?;
        pairs.push((fe, value));
    }
    Ok(ConvergenceTrace::from_pairs(&pairs))
}

pub fn write_summary(table: &SummaryTable, path: &Path) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "algo,function,D,m,N,M,budget,runs,mean,std")?;
    for r in &table.rows {
        let std = r.std.map(fmt_real).unwrap_or_default();
        writeln!(
            w,
            "{},{},{},{},{},{},{},{},{},{}",
            r.algorithm,
            r.function,
            r.dimension,
            r.group_size,
            r.population_size,
            r.groups,
            r.budget,
            r.runs,
            fmt_real(r.mean),
            std
        )?;
    }
    w.flush()?;
    Ok(())
}

/// Per-run status file. Unlike the traces it contains wall times.
pub fn write_runs_csv(records: &[RunRecord], path: &Path) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "run,seed,status,final_value,consumed,wall_ms,trace")?;
    for r in records {
        let (status, fv) = match &r.status {
            RunStatus::Ok => ("ok".to_string(), r.final_value.map(fmt_real).unwrap_or_default()),
            RunStatus::Failed(msg) => (format!("failed: {}", msg.replace([',', '\n'], ";")), String::new()),
        };
        writeln!(
            w,
            "{},{},{},{},{},{},{}",
            r.run_index,
            r.seed,
            status,
            fv,
            r.consumed,
            r.wall_time.as_millis(),
            r.trace_path.display()
        )?;
    }
    w.flush()?;
    Ok(())
}

fn trace_file(cfg: &ExperimentConfig, run: usize) -> PathBuf {
    cfg.output_dir.join(format!("trace_run_{run}.csv"))
}

/// Runs all `cfg.runs` runs on one shared instance. A failing run is
/// recorded and does not affect the others.
pub fn execute_runs(cfg: &ExperimentConfig, mode: ExecMode) -> Result<Vec<RunRecord>> {
    cfg.validate()?;
    fs::create_dir_all(&cfg.output_dir)?;
    let instance_seed = derive_seed(cfg.base_seed, "instance", 0);
    let instance = make_instance(cfg.function, cfg.dimension, cfg.group_size, instance_seed)?;
    let spec = instance.problem_spec();

    Ok(map_indexed(cfg.runs, mode, |r| {
        let seed = derive_seed(cfg.base_seed, "run", r as u64);
        let trace_path = trace_file(cfg, r);
        let start = Instant::now();
        let outcome = run_algorithm(cfg.algorithm, &instance, &spec, &cfg.dac_config(seed), &mut ())
            .and_then(|out| write_trace_csv(&out.trace, r, &trace_path).map(|()| out));
        let wall_time = start.elapsed();
        match outcome {
            Ok(out) => RunRecord {
                run_index: r,
                seed,
                status: RunStatus::Ok,
                final_value: Some(out.best_value()),
                consumed: out.consumed,
                wall_time,
                trace_path,
            },
            Err(e) => RunRecord {
                run_index: r,
                seed,
                status: RunStatus::Failed(e.to_string()),
                final_value: None,
                consumed: 0,
                wall_time,
                trace_path,
            },
        }
    }))
}

/// Executes the experiment and writes traces, `summary.csv` and `runs.csv`
/// into the output directory. The summary covers successful runs only.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<(Vec<RunRecord>, SummaryTable)> {
    let records = execute_runs(cfg, ExecMode::Auto)?;
    let finals: Vec<f64> = records.iter().filter_map(|r| r.final_value).collect();
    let (mean, std) = summarize(&finals);
    let table = SummaryTable {
        rows: vec![SummaryRow {
            algorithm: cfg.algorithm,
            function: cfg.function.name().to_string(),
            dimension: cfg.dimension,
            group_size: cfg.group_size,
            population_size: cfg.population_size,
            groups: cfg.groups,
            budget: cfg.budget,
            runs: finals.len(),
            mean,
            std,
        }],
    };
    write_summary(&table, &cfg.output_dir.join(SUMMARY_FILE))?;
    write_runs_csv(&records, &cfg.output_dir.join(RUNS_FILE))?;
    Ok((records, table))
}
