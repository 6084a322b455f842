use dacopt::analysis::median;
use dacopt::base::{derive_seed, Direction, ProblemSpec};
use dacopt::dachc::{run_dachc, run_hill_climbers, ComplementPolicy, GaussianOperator};
use dacopt::framework::{
    run_dac, run_phc, DacConfig, FeLog, MonotonicityAudit, RandomGrouping, RunObserver, Tee,
};
use dacopt::objectives::{make_instance, sphere, FunctionId};
use dacopt::par::{map_indexed, ExecMode};

fn capped(n: usize, m: usize, iterations: u64, seed: u64) -> DacConfig {
    DacConfig {
        population_size: n,
        groups: m,
        budget: u64::MAX,
        seed,
        max_iterations: Some(iterations),
        log_every: 1000,
        ..DacConfig::default()
    }
}

fn sphere_fn(x: &[f64]) -> f64 {
    sphere(x).unwrap()
}

#[test]
fn hill_climber_fe_law() {
    let inst = make_instance(FunctionId::F3, 20, 5, 11).unwrap();
    let spec = inst.problem_spec();
    for (n, m) in [(1usize, 1usize), (2, 10), (3, 4)] {
        let k = 6;
        let cfg = capped(n, m, k, 3);

        let mut log = FeLog::default();
        let out = run_dachc(&inst, &spec, &cfg, &mut log).unwrap();
        let per_iter = (m * n * n) as u64;
        let expected: Vec<u64> = (1..=k).map(|t| n as u64 + t * per_iter).collect();
        assert_eq!(log.after_iteration, expected, "DAC-HC N={n} M={m}");
        assert_eq!(out.consumed, n as u64 + k * per_iter);

        let mut log = FeLog::default();
        let out = run_phc(&inst, &spec, &cfg, &mut log).unwrap();
        assert_eq!(out.consumed, n as u64 + k * (m * n) as u64, "PHC N={n} M={m}");
    }
}

#[test]
fn generic_dac_fe_law() {
    let inst = make_instance(FunctionId::F3, 20, 5, 11).unwrap();
    let spec = inst.problem_spec();
    for (n, m) in [(1usize, 1usize), (2, 10), (3, 4)] {
        let k = 4;
        let n64 = n as u64;
        let m64 = m as u64;
        for (cache, per_group) in [(false, 2 * n64 * n64), (true, 2 * n64 * n64 - n64)] {
            let cfg = DacConfig {
                incumbent_cache: cache,
                ..capped(n, m, k, 5)
            };
            let mut op = GaussianOperator::for_dimension(20);
            let mut log = FeLog::default();
            let out = run_dac(&inst, &spec, &cfg, &mut op, &mut RandomGrouping, &mut log).unwrap();
            let expected: Vec<u64> = (1..=k).map(|t| n64 + t * m64 * per_group).collect();
            assert_eq!(log.after_iteration, expected, "N={n} M={m} cache={cache}");
            assert_eq!(out.consumed, n64 + k * m64 * per_group);
        }
    }
}

#[test]
fn budget_is_a_hard_cap() {
    let inst = make_instance(FunctionId::F1, 100, 10, 2).unwrap();
    let spec = inst.problem_spec();
    for budget in [2, 3, 41, 4040, 4041] {
        let cfg = DacConfig {
            budget,
            log_every: 7,
            ..DacConfig::default()
        };
        let out = run_dachc(&inst, &spec, &cfg, &mut ()).unwrap();
        assert_eq!(out.consumed, budget);
        assert_eq!(out.trace.last().unwrap().fe, budget);
        let out = run_phc(&inst, &spec, &cfg, &mut ()).unwrap();
        assert_eq!(out.consumed, budget);
    }
}

#[test]
fn rows_never_worsen() {
    for id in [FunctionId::F2, FunctionId::F5, FunctionId::Rosenbrock] {
        let inst = make_instance(id, 20, 5, 8).unwrap();
        let spec = inst.problem_spec();
        let cfg = DacConfig {
            population_size: 3,
            groups: 4,
            budget: 20_000,
            seed: 1,
            ..DacConfig::default()
        };
        let mut a = MonotonicityAudit::new(Direction::Minimize);
        let mut b = MonotonicityAudit::new(Direction::Minimize);
        let mut c = MonotonicityAudit::new(Direction::Minimize);
        run_dachc(&inst, &spec, &cfg, &mut a).unwrap();
        run_phc(&inst, &spec, &cfg, &mut b).unwrap();
        let mut op = GaussianOperator::for_dimension(20);
        run_dac(&inst, &spec, &cfg, &mut op, &mut RandomGrouping, &mut c).unwrap();
        for audit in [a, b, c] {
            assert!(audit.steps > 0);
            assert_eq!(audit.violations, 0, "{id}");
        }
    }
}

#[test]
fn phc_rows_monotone_on_separable_sphere() {
    let spec = ProblemSpec::uniform(12, -100.0, 100.0, Direction::Minimize).unwrap();
    for (n, m) in [(1, 3), (4, 6), (2, 12)] {
        let cfg = DacConfig {
            population_size: n,
            groups: m,
            budget: 5000,
            seed: 4,
            ..DacConfig::default()
        };
        let mut audit = MonotonicityAudit::new(Direction::Minimize);
        let out = run_phc(&sphere_fn, &spec, &cfg, &mut audit).unwrap();
        assert_eq!(audit.violations, 0);
        assert!(out.trace.points.windows(2).all(|w| w[1].best_value <= w[0].best_value));
    }
}

#[test]
fn single_row_phc_equals_dachc() {
    let inst = make_instance(FunctionId::F2, 40, 5, 1).unwrap();
    let spec = inst.problem_spec();
    let cfg = DacConfig {
        population_size: 1,
        groups: 8,
        budget: 10_000,
        seed: 77,
        log_every: 50,
        ..DacConfig::default()
    };
    let a = run_dachc(&inst, &spec, &cfg, &mut ()).unwrap();
    let b = run_phc(&inst, &spec, &cfg, &mut ()).unwrap();
    assert_eq!(a.trace, b.trace);
    assert_eq!(a.best.values(), b.best.values());
}

#[test]
fn own_row_policy_is_phc() {
    let inst = make_instance(FunctionId::F5, 20, 5, 3).unwrap();
    let spec = inst.problem_spec();
    let cfg = DacConfig {
        budget: 8000,
        groups: 4,
        seed: 9,
        ..DacConfig::default()
    };
    let a = run_hill_climbers(&inst, &spec, &cfg, ComplementPolicy::OwnRow, &mut ()).unwrap();
    let b = run_phc(&inst, &spec, &cfg, &mut ()).unwrap();
    assert_eq!(a.trace, b.trace);
}

#[test]
fn one_group_rows_evolve_like_phc() {
    // With M = 1 the remainder is empty, so the complement choice cannot
    // change any row; only the FE accounting differs.
    let spec = ProblemSpec::uniform(6, -100.0, 100.0, Direction::Minimize).unwrap();
    let cfg = capped(3, 1, 40, 12);
    let a = run_dachc(&sphere_fn, &spec, &cfg, &mut ()).unwrap();
    let b = run_phc(&sphere_fn, &spec, &cfg, &mut ()).unwrap();
    assert_eq!(a.population.values(), b.population.values());
    assert_eq!(a.consumed, 3 + 40 * 9);
    assert_eq!(b.consumed, 3 + 40 * 3);
}

#[test]
fn one_plus_one_on_a_line() {
    let spec = ProblemSpec::uniform(1, -100.0, 100.0, Direction::Minimize).unwrap();
    let cfg = DacConfig {
        population_size: 1,
        groups: 1,
        budget: 500,
        seed: 2,
        ..DacConfig::default()
    };
    let out = run_dachc(&sphere_fn, &spec, &cfg, &mut ()).unwrap();
    assert_eq!(out.trace.len(), 500);
    assert!(out.trace.points.windows(2).all(|w| w[1].best_value <= w[0].best_value));
    assert!(out.best_value() < out.trace.points[0].best_value);
}

#[test]
fn seeds_fix_the_run() {
    let inst = make_instance(FunctionId::F3, 30, 5, 6).unwrap();
    let spec = inst.problem_spec();
    let cfg = DacConfig {
        budget: 6000,
        groups: 5,
        seed: 100,
        log_every: 10,
        ..DacConfig::default()
    };
    let a = run_dachc(&inst, &spec, &cfg, &mut ()).unwrap();
    let b = run_dachc(&inst, &spec, &cfg, &mut ()).unwrap();
    assert_eq!(a.trace, b.trace);
    let c = run_dachc(&inst, &spec, &DacConfig { seed: 101, ..cfg }, &mut ()).unwrap();
    assert_ne!(a.trace, c.trace);
}

#[test]
fn generic_dac_improves_small_f3() {
    let inst = make_instance(FunctionId::F3, 8, 2, 5).unwrap();
    let spec = inst.problem_spec();
    let cfg = DacConfig {
        population_size: 2,
        groups: 4,
        budget: 10_000,
        seed: 9,
        log_every: 100,
        ..DacConfig::default()
    };
    let mut op = GaussianOperator::for_dimension(8);
    let mut audit = MonotonicityAudit::new(Direction::Minimize);
    let mut log = FeLog::default();
    let mut tee = Tee(vec![&mut audit as &mut dyn RunObserver, &mut log]);
    let out = run_dac(&inst, &spec, &cfg, &mut op, &mut RandomGrouping, &mut tee).unwrap();
    assert!(out.best_value() < out.trace.points[0].best_value);
    assert_eq!(audit.violations, 0);
    assert!(!log.after_iteration.is_empty());
}

#[test]
fn dachc_descends_on_scaled_f1() {
    let inst = make_instance(FunctionId::F1, 100, 10, derive_seed(42, "instance", 0)).unwrap();
    let spec = inst.problem_spec();
    let cfg = DacConfig {
        population_size: 2,
        groups: 10,
        budget: 200_000,
        seed: derive_seed(42, "run", 0),
        log_every: 1000,
        ..DacConfig::default()
    };
    let out = run_dachc(&inst, &spec, &cfg, &mut ()).unwrap();
    let initial = out.trace.points[0].best_value;
    assert!(out.best_value() < 1e-3 * initial);
}

#[test]
#[ignore = "refuted: PHC reaches a lower median on this configuration (about 1e-16 against 1e-14)"]
fn dachc_not_worse_than_phc_on_f4_d40() {
    let inst = make_instance(FunctionId::F4, 40, 10, derive_seed(42, "instance", 0)).unwrap();
    let spec = inst.problem_spec();
    let finals = map_indexed(10, ExecMode::Auto, |r| {
        let cfg = DacConfig {
            population_size: 2,
            groups: 4,
            budget: 200_000,
            seed: derive_seed(42, "run", r as u64),
            log_every: 10_000,
            ..DacConfig::default()
        };
        let d = run_dachc(&inst, &spec, &cfg, &mut ()).unwrap().best_value();
        let p = run_phc(&inst, &spec, &cfg, &mut ()).unwrap().best_value();
        (d, p)
    });
    let mut d: Vec<f64> = finals.iter().map(|v| v.0).collect();
    let mut p: Vec<f64> = finals.iter().map(|v| v.1).collect();
    assert!(median(&mut d) <= median(&mut p));
}
