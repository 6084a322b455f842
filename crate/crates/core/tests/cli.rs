use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn dacopt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dacopt")).args(args).output().unwrap()
}

fn run_into(dir: &Path, seed: &str) -> Output {
    dacopt(&[
        "run", "--algo", "dac-hc", "--fn", "f2", "--dim", "20", "--m", "5", "--n", "2", "--M", "4",
        "--budget", "3000", "--runs", "3", "--seed", seed, "--log-every", "250",
        "--out", dir.to_str().unwrap(),
    ])
}

#[test]
fn exit_codes() {
    assert_eq!(dacopt(&["--help"]).status.code(), Some(0));
    assert_eq!(dacopt(&["run", "--help"]).status.code(), Some(0));
    assert_eq!(dacopt(&[]).status.code(), Some(2));
    assert_eq!(dacopt(&["run", "--fn", "f9"]).status.code(), Some(2));
    assert_eq!(dacopt(&["run", "--colour", "red"]).status.code(), Some(2));
    assert_eq!(dacopt(&["fit", "--trace", "/nonexistent/trace.csv"]).status.code(), Some(3));
}

#[test]
fn unknown_config_key_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("exp.cfg");
    fs::write(&cfg, "runs = 2\nfavourite = 3\n").unwrap();
    let out = dacopt(&["run", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("favourite"));
}

#[test]
fn flags_override_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("exp.cfg");
    let out_dir = dir.path().join("out");
    fs::write(
        &cfg,
        format!(
            "algo = phc\nfn = f3\ndim = 10\nm = 5\nM = 2\nbudget = 500\nruns = 25\nlog-every = 100\nout = {}\n",
            out_dir.display()
        ),
    )
    .unwrap();
    let out = dacopt(&["run", "--config", cfg.to_str().unwrap(), "--runs", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let summary = fs::read_to_string(out_dir.join("summary.csv")).unwrap();
    let row = summary.lines().nth(1).unwrap();
    assert!(row.starts_with("phc,f3,10,5,2,2,500,2,"), "{row}");
    assert!(out_dir.join("trace_run_1.csv").exists());
    assert!(!out_dir.join("trace_run_2.csv").exists());
}

#[test]
fn identical_configs_give_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b, c) = (dir.path().join("a"), dir.path().join("b"), dir.path().join("c"));
    for (d, seed) in [(&a, "42"), (&b, "42"), (&c, "43")] {
        let out = run_into(d, seed);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    }
    for name in ["trace_run_0.csv", "trace_run_1.csv", "trace_run_2.csv", "summary.csv"] {
        assert_eq!(fs::read(a.join(name)).unwrap(), fs::read(b.join(name)).unwrap(), "{name}");
    }
    assert_ne!(
        fs::read(a.join("trace_run_0.csv")).unwrap(),
        fs::read(c.join("trace_run_0.csv")).unwrap()
    );
}

#[test]
fn fit_reads_a_trace() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let mut text = String::from("run,fe,best_value\n");
    for k in 0..10 {
        text.push_str(&format!("0,{k},{:?}\n", 10.0 * 0.5f64.powi(k)));
    }
    fs::write(&path, text).unwrap();
    let out = dacopt(&["fit", "--trace", path.to_str().unwrap(), "--window", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    let slope: f64 = stdout
        .lines()
        .find_map(|l| l.strip_prefix("slope "))
        .unwrap()
        .parse()
        .unwrap();
    assert!((slope + std::f64::consts::LN_2).abs() < 1e-12);
}

#[test]
fn oracle_and_bench_info() {
    let out = dacopt(&[
        "oracle", "accurate-complement", "--fn", "schwefel12", "--raw", "--dim", "2", "--indices", "0",
        "--values", "2", "--lo", "-3", "--hi", "0", "--points", "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("complement -2.0"), "{stdout}");
    assert!(stdout.contains("value 4.0"), "{stdout}");

    let out = dacopt(&["oracle", "lemma1", "--probs", "0.9,0.1", "--dim", "3", "--group-size", "1"]);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("bound 0.25"), "{stdout}");
    assert!(stdout.contains("tight false"));

    let out = dacopt(&["bench-info", "--fn", "f5", "--dim", "20", "--m", "5", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("optimum_value 0.0"));
}
