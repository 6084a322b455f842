//! Experiment configuration: flat `key = value` files overridden by flags.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::framework::DacConfig;
use crate::objectives::FunctionId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    DacHc,
    Phc,
    DacGeneric,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::DacHc => "dac-hc",
            Algorithm::Phc => "phc",
            Algorithm::DacGeneric => "dac",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dac-hc" | "dachc" => Ok(Algorithm::DacHc),
            "phc" => Ok(Algorithm::Phc),
            "dac" | "dac-generic" => Ok(Algorithm::DacGeneric),
            _ => Err(Error::Usage(format!("unknown algorithm '{s}'"))),
        }
    }
}

/// Keys accepted in config files; identical to the long flag names.
pub const CONFIG_KEYS: [&str; 11] = [
    "algo", "fn", "dim", "m", "n", "M", "budget", "runs", "seed", "out", "log-every",
];

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub algorithm: Algorithm,
    pub function: FunctionId,
    pub dimension: usize,
    /// Group size `m` used by the composite benchmarks.
    pub group_size: usize,
    /// Population size `N`.
    pub population_size: usize,
    /// Sub-problem count `M`.
    pub groups: usize,
    pub budget: u64,
    pub runs: usize,
    pub base_seed: u64,
    pub output_dir: PathBuf,
    pub log_every: u64,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            algorithm: Algorithm::DacHc,
            function: FunctionId::F1,
            dimension: 100,
            group_size: 10,
            population_size: 2,
            groups: 10,
            budget: 200_000,
            runs: 10,
            base_seed: 0,
            output_dir: PathBuf::from("results"),
            log_every: 1000,
        }
    }
}

fn parse_num<T: FromStr>(key: &str, value: &str) -> Result<T> {
    let cleaned: String = value.chars().filter(|&c| c != '_').collect();
    cleaned
        .parse()
        .or_else(|_| {
            // Accept scientific notation such as 2e5 for integer fields.
            cleaned
                .parse::<f64>()
                .ok()
                .filter(|v| v.fract() == 0.0 && *v >= 0.0)
                .and_then(|v| format!("{v:.0}").parse().ok())
                .ok_or(())
        })
        .map_err(|()| Error::Usage(format!("invalid value '{value}' for '{key}'")))
}

impl ExperimentConfig {
    /// Applies one `key = value` setting.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let value = value.trim();
        match key {
            "algo" => self.algorithm = value.parse()?,
            "fn" => self.function = value.parse()?,
            "dim" => self.dimension = parse_num(key, value)?,
            "m" => self.group_size = parse_num(key, value)?,
            "n" => self.population_size = parse_num(key, value)?,
            "M" => self.groups = parse_num(key, value)?,
            "budget" => self.budget = parse_num(key, value)?,
            "runs" => self.runs = parse_num(key, value)?,
            "seed" => self.base_seed = parse_num(key, value)?,
            "out" => self.output_dir = PathBuf::from(value),
            "log-every" | "log_every" => self.log_every = parse_num(key, value)?,
            other => return Err(Error::Usage(format!("unknown key '{other}'"))),
        }
        Ok(())
    }

    /// Builds a config from defaults, then the file (if any), then `overrides`
    /// in order.
    pub fn resolve<'a>(
        file: Option<&Path>,
        overrides: impl IntoIterator<Item = (&'a str, String)>,
    ) -> Result<Self> {
        let mut cfg = Self::default();
        if let Some(path) = file {
            let text = fs::read_to_string(path)?;
            for (key, value) in parse_config_text(&text)? {
                cfg.set(&key, &value)?;
            }
        }
        for (key, value) in overrides {
            cfg.set(key, &value)?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.runs == 0 {
            return Err(Error::Usage("runs must be >= 1".into()));
        }
        if self.log_every == 0 {
            return Err(Error::Usage("log-every must be >= 1".into()));
        }
        self.dac_config(0).validate(self.dimension)?;
        crate::objectives::make_instance(self.function, self.dimension, self.group_size, 0)?;
        Ok(())
    }

    /// Per-run optimizer configuration.
    pub fn dac_config(&self, seed: u64) -> DacConfig {
        DacConfig {
            population_size: self.population_size,
            groups: self.groups,
            budget: self.budget,
            regroup_each_iteration: true,
            seed,
            max_iterations: None,
            log_every: self.log_every,
            incumbent_cache: true,
        }
    }
}

/// Parses `key = value` lines; blank lines and `#` comments are skipped.
pub fn parse_config_text(text: &str) -> Result<Vec<(String, String)>> {
    let mut pairs = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| Error::Usage(format!("line {}: expected key = value", lineno + 1)))?;
        let key = key.trim();
        if !CONFIG_KEYS.contains(&key) && key != "log_every" {
            return Err(Error::Usage(format!("unknown key '{key}'")));
        }
        pairs.push((key.to_string(), value.trim().to_string()));
    }
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("exp.cfg");
        fs::write(&path, "# long protocol\nruns = 25\nfn = f3\nbudget = 3e6\n").unwrap();
        let cfg = ExperimentConfig::resolve(Some(&path), [("runs", "5".to_string())]).unwrap();
        assert_eq!(cfg.runs, 5);
        assert_eq!(cfg.function, FunctionId::F3);
        assert_eq!(cfg.budget, 3_000_000);
    }

    #[test]
    fn unknown_key_is_named() {
        let err = parse_config_text("colour = red").unwrap_err();
        assert!(err.to_string().contains("colour"));
        let err = ExperimentConfig::resolve(None, [("fn", "f9".to_string())]).unwrap_err();
        assert!(matches!(err, Error::Usage(ref m) if m.contains("f9")));
    }

    #[test]
    fn invalid_combinations_rejected() {
        assert!(ExperimentConfig::resolve(None, [("runs", "0".to_string())]).is_err());
        assert!(ExperimentConfig::resolve(None, [("M", "101".to_string())]).is_err());
        assert!(ExperimentConfig::resolve(None, [("fn", "f3".to_string()), ("m", "7".to_string())]).is_err());
    }
}
