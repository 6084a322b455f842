use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use dacopt::analysis::{
    accurate_complement, detect_interaction, lemma1_report, loglinear_fit, ranking_agreement, GridSpec,
};
use dacopt::base::{complement_indices, Direction, Objective, PartialSolution, ProblemSpec, RngStream};
use dacopt::harness::{exit_code, read_trace_csv, run_experiment, ExperimentConfig, RunStatus};
use dacopt::objectives::{make_instance, rosenbrock, schwefel12, sphere, BenchmarkInstance, FunctionId};
use dacopt::par::ExecMode;
use dacopt::{fmt_real, Error, Result};

#[derive(Parser)]
#[command(name = "dacopt", version, about = "Divide-and-approximate-conquer optimizer and experiment harness")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a seeded multi-run experiment and write CSV output.
    Run(RunArgs),
    /// Brute-force analysis oracles.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Log-linear fit of a trace CSV.
    Fit {
        #[arg(long)]
        trace: PathBuf,
        /// Trailing fraction of the FE range to fit.
        #[arg(long, default_value_t = 0.5)]
        window: f64,
    },
    /// Print a benchmark instance: shift, permutation and optimum value.
    BenchInfo {
        #[arg(long = "fn")]
        function: String,
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 10)]
        m: usize,
        /// Instance seed (used as is).
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct RunArgs {
    /// Flat `key = value` file; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    algo: Option<String>,
    #[arg(long = "fn")]
    function: Option<String>,
    #[arg(long)]
    dim: Option<String>,
    /// Benchmark group size.
    #[arg(long = "m")]
    group_size: Option<String>,
    /// Population size.
    #[arg(long = "n")]
    population: Option<String>,
    /// Number of sub-problems.
    #[arg(long = "M")]
    groups: Option<String>,
    #[arg(long)]
    budget: Option<String>,
    #[arg(long)]
    runs: Option<String>,
    #[arg(long)]
    seed: Option<String>,
    #[arg(long)]
    out: Option<String>,
    #[arg(long = "log-every")]
    log_every: Option<String>,
}

/// Target function shared by the oracle subcommands.
#[derive(Args)]
struct TargetArgs {
    /// sphere, schwefel12, rosenbrock, or a benchmark id (f1..f5).
    #[arg(long = "fn")]
    function: String,
    #[arg(long)]
    dim: usize,
    /// Benchmark group size; ignored with --raw.
    #[arg(long, default_value_t = 1)]
    m: usize,
    /// Instance seed; ignored with --raw.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Evaluate the plain unshifted function.
    #[arg(long)]
    raw: bool,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Best complement of a partial solution over a uniform grid.
    AccurateComplement {
        #[command(flatten)]
        target: TargetArgs,
        /// Comma-separated coordinates of the partial solution.
        #[arg(long, value_delimiter = ',')]
        indices: Vec<usize>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        values: Vec<f64>,
        #[arg(long, allow_hyphen_values = true)]
        lo: f64,
        #[arg(long, allow_hyphen_values = true)]
        hi: f64,
        /// Grid points per remaining coordinate.
        #[arg(long)]
        points: usize,
    },
    /// Search for a rank flip between two coordinates.
    Interaction {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long = "rng-seed", default_value_t = 0)]
        rng_seed: u64,
    },
    /// Pairwise ranking agreement of approximate against accurate values.
    Ranking {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long, value_delimiter = ',')]
        indices: Vec<usize>,
        /// Partial solutions, `;`-separated lists of `,`-separated values.
        #[arg(long, allow_hyphen_values = true)]
        partials: String,
        /// Candidate complements on the remaining coordinates, same format.
        #[arg(long, allow_hyphen_values = true)]
        complements: String,
        #[arg(long, allow_hyphen_values = true)]
        lo: f64,
        #[arg(long, allow_hyphen_values = true)]
        hi: f64,
        #[arg(long)]
        points: usize,
    },
    /// Product of per-variable complement probabilities and its bound.
    Lemma1 {
        #[arg(long, value_delimiter = ',')]
        probs: Vec<f64>,
        #[arg(long)]
        dim: usize,
        #[arg(long = "group-size")]
        group_size: usize,
    },
}

enum Target {
    Raw(fn(&[f64]) -> Result<f64>),
    Instance(BenchmarkInstance),
}

impl Objective for Target {
    fn evaluate(&self, x: &[f64]) -> Result<f64> {
        match self {
            Target::Raw(f) => f(x),
            Target::Instance(inst) => inst.evaluate(x),
        }
    }
}

impl TargetArgs {
    fn build(&self) -> Result<Target> {
        let id: FunctionId = self.function.parse()?;
        if self.raw {
            let f: fn(&[f64]) -> Result<f64> = match id {
                FunctionId::Sphere => sphere,
                FunctionId::Schwefel12 => schwefel12,
                FunctionId::Rosenbrock => rosenbrock,
                other => return Err(Error::Usage(format!("--raw needs a plain function, got {other}"))),
            };
            Ok(Target::Raw(f))
        } else {
            Ok(Target::Instance(make_instance(id, self.dim, self.m, self.seed)?))
        }
    }

    fn spec(&self) -> Result<ProblemSpec> {
        ProblemSpec::uniform(self.dim, -100.0, 100.0, Direction::Minimize)
    }
}

fn parse_rows(text: &str) -> Result<Vec<Vec<f64>>> {
    text.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|row| {
            row.split(',')
                .map(|v| v.trim().parse::<f64>().map_err(|_| Error::Usage(format!("bad number '{v}'"))))
                .collect()
        })
        .collect()
}

fn join(values: &[f64]) -> String {
    values.iter().map(|v| fmt_real(*v)).collect::<Vec<_>>().join(",")
}

fn run(args: RunArgs) -> Result<()> {
    let flags = [
        ("algo", args.algo),
        ("fn", args.function),
        ("dim", args.dim),
        ("m", args.group_size),
        ("n", args.population),
        ("M", args.groups),
        ("budget", args.budget),
        ("runs", args.runs),
        ("seed", args.seed),
        ("out", args.out),
        ("log-every", args.log_every),
    ];
    let overrides = flags.into_iter().filter_map(|(k, v)| v.map(|v| (k, v)));
    let cfg = ExperimentConfig::resolve(args.config.as_deref(), overrides)?;
    let (records, table) = run_experiment(&cfg)?;
    let mut failed = 0;
    for r in &records {
        match &r.status {
            RunStatus::Ok => println!(
                "run {} final {} fe {}",
                r.run_index,
                fmt_real(r.final_value.unwrap_or(f64::NAN)),
                r.consumed
            ),
            RunStatus::Failed(msg) => {
                failed += 1;
                eprintln!("run {} failed: {msg}", r.run_index);
            }
        }
    }
    for row in &table.rows {
        let std = row.std.map(fmt_real).unwrap_or_else(|| "-".into());
        println!("{} {} mean {} std {}", row.algorithm, row.function, fmt_real(row.mean), std);
    }
    if failed > 0 {
        return Err(Error::InvalidConfig(format!("{failed} of {} runs failed", records.len())));
    }
    Ok(())
}

fn oracle(cmd: OracleCommand) -> Result<()> {
    match cmd {
        OracleCommand::AccurateComplement { target, indices, values, lo, hi, points } => {
            let f = target.build()?;
            let partial = PartialSolution::new(indices.clone(), values)?;
            let grid = GridSpec::uniform(complement_indices(&indices, target.dim), lo, hi, points)?;
            let (best, value) = accurate_complement(&f, &partial, &grid, Direction::Minimize, ExecMode::Auto)?;
            println!("indices {:?}", best.indices());
            println!("complement {}", join(best.values()));
            println!("value {}", fmt_real(value));
        }
        OracleCommand::Interaction { target, i, j, trials, rng_seed } => {
            let f = target.build()?;
            let spec = target.spec()?;
            let mut rng = RngStream::new(rng_seed, "interaction", 0);
            match detect_interaction(&f, i, j, &spec, trials, &mut rng)? {
                Some(w) => {
                    println!("interacting {i} {j}");
                    println!("xi {} xi' {} xj {} xj' {}", fmt_real(w.xi), fmt_real(w.xi_prime), fmt_real(w.xj), fmt_real(w.xj_prime));
                    println!("values {}", join(&w.values));
                }
                None => println!("no witness in {trials} trials"),
            }
        }
        OracleCommand::Ranking { target, indices, partials, complements, lo, hi, points } => {
            let f = target.build()?;
            let rest = complement_indices(&indices, target.dim);
            let partials = parse_rows(&partials)?
                .into_iter()
                .map(|v| PartialSolution::new(indices.clone(), v))
                .collect::<Result<Vec<_>>>()?;
            let complements = parse_rows(&complements)?
                .into_iter()
                .map(|v| PartialSolution::new(rest.clone(), v))
                .collect::<Result<Vec<_>>>()?;
            let grid = GridSpec::uniform(rest, lo, hi, points)?;
            let agreement =
                ranking_agreement(&f, &partials, &complements, &grid, Direction::Minimize, ExecMode::Auto)?;
            println!("agreement {}", fmt_real(agreement));
        }
        OracleCommand::Lemma1 { probs, dim, group_size } => {
            let report = lemma1_report(&probs, dim, group_size)?;
            println!("product {}", fmt_real(report.product));
            println!("bound {}", fmt_real(report.bound));
            println!("tight {}", report.is_tight());
        }
    }
    Ok(())
}

fn dispatch(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Run(args) => run(args),
        Command::Oracle(cmd) => oracle(cmd),
        Command::Fit { trace, window } => {
            let trace = read_trace_csv(&trace)?;
            let fit = loglinear_fit(&trace, window)?;
            println!("slope {}", fmt_real(fit.slope));
            println!("intercept {}", fmt_real(fit.intercept));
            println!("r_squared {}", fmt_real(fit.r_squared));
            println!("points {}", fit.points);
            if fit.degenerate {
                println!("warning: zero variance in log-values");
            }
            if fit.positive_suffix_only {
                println!("warning: fitted the positive suffix only");
            }
            Ok(())
        }
        Command::BenchInfo { function, dim, m, seed } => {
            let id: FunctionId = function.parse()?;
            let inst = make_instance(id, dim, m, seed)?;
            let opt = inst.optimum();
            println!("function {id}");
            println!("dimension {dim}");
            println!("group_size {}", inst.group_size());
            println!("shift {}", join(inst.shift()));
            let perm: Vec<String> = inst.permutation().iter().map(|p| p.to_string()).collect();
            println!("permutation {}", perm.join(","));
            println!("optimum {}", join(&opt));
            println!("optimum_value {}", fmt_real(inst.evaluate(&opt)?));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
