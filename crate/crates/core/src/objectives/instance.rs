//! Shifted and permuted benchmark instances built from the base functions.
//!
//! With `z = x − o` and `z(P_a:P_b)` denoting the entries of `z` at
//! permutation positions `a..=b`:
//!
//! | id   | value                                                              |
//! |------|--------------------------------------------------------------------|
//! | F1   | `sch(z(P_1:P_m))·1e6 + sph(z(P_{m+1}:P_D))`                        |
//! | F2   | `Σ_{k≤D/2m} sch(z(P_{(k−1)m+1}:P_{km})) + sph(z(P_{D/2+1}:P_D))`   |
//! | F3   | `Σ_{k≤D/m} sch(z(P_{(k−1)m+1}:P_{km}))`                            |
//! | F4   | `sch(z)`                                                           |
//! | F5   | `Σ_{k≤D/m} ros(z(P_{(k−1)m+1}:P_{km}))`                            |
//!
//! `Sphere`, `Schwefel12` and `Rosenbrock` apply the plain function to `z`.

use std::fmt;
use std::str::FromStr;

use crate::base::{Direction, Objective, ProblemSpec, RngStream};
use crate::error::{Error, Result};
use crate::objectives::functions::{rosenbrock_iter, schwefel12_iter, sphere_iter};

const F1_SCHWEFEL_WEIGHT: f64 = 1e6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FunctionId {
    F1,
    F2,
    F3,
    F4,
    F5,
    Sphere,
    Schwefel12,
    Rosenbrock,
}

impl FunctionId {
    pub const ALL: [FunctionId; 8] = [
        FunctionId::F1,
        FunctionId::F2,
        FunctionId::F3,
        FunctionId::F4,
        FunctionId::F5,
        FunctionId::Sphere,
        FunctionId::Schwefel12,
        FunctionId::Rosenbrock,
    ];

    pub const COMPOSITES: [FunctionId; 5] = [
        FunctionId::F1,
        FunctionId::F2,
        FunctionId::F3,
        FunctionId::F4,
        FunctionId::F5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FunctionId::F1 => "f1",
            FunctionId::F2 => "f2",
            FunctionId::F3 => "f3",
            FunctionId::F4 => "f4",
            FunctionId::F5 => "f5",
            FunctionId::Sphere => "sphere",
            FunctionId::Schwefel12 => "schwefel12",
            FunctionId::Rosenbrock => "rosenbrock",
        }
    }

    /// Whether the optimum sits at `o + 1` rather than `o`.
    fn rosenbrock_based(self) -> bool {
        matches!(self, FunctionId::F5 | FunctionId::Rosenbrock)
    }
}

impl fmt::Display for FunctionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FunctionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FunctionId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Usage(format!("unknown function '{s}'")))
    }
}

/// Bounds and shift range used when drawing an instance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InstanceOptions {
    pub bounds: (f64, f64),
    pub shift_range: (f64, f64),
}

impl Default for InstanceOptions {
    fn default() -> Self {
        Self {
            bounds: (-100.0, 100.0),
            shift_range: (-80.0, 80.0),
        }
    }
}

/// One reproducible benchmark problem: function, shift and permutation.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchmarkInstance {
    function_id: FunctionId,
    dimension: usize,
    group_size: usize,
    shift: Vec<f64>,
    permutation: Vec<usize>,
    instance_seed: u64,
    bounds: (f64, f64),
}

/// Draws the instance for `(function_id, dimension, group_size, instance_seed)`
/// with the default bounds and shift range.
pub fn make_instance(
    function_id: FunctionId,
    dimension: usize,
    group_size: usize,
    instance_seed: u64,
) -> Result<BenchmarkInstance> {
    BenchmarkInstance::with_options(
        function_id,
        dimension,
        group_size,
        instance_seed,
        InstanceOptions::default(),
    )
}

fn check_dimensions(id: FunctionId, d: usize, m: usize) -> Result<()> {
    let fail = |why: &str| Err(Error::IncompatibleDimensions(format!("{id} with D={d}, m={m}: {why}")));
    if d == 0 {
        return fail("D must be positive");
    }
    match id {
        FunctionId::F1 if m == 0 || d < m => fail("need 1 <= m <= D"),
        FunctionId::F2 if m == 0 || !d.is_multiple_of(2) || !(d / 2).is_multiple_of(m) => {
            fail("need D even and D/2 divisible by m")
        }
        FunctionId::F3 if m == 0 || !d.is_multiple_of(m) => fail("need D divisible by m"),
        FunctionId::F5 if m < 2 || !d.is_multiple_of(m) => fail("need m >= 2 and D divisible by m"),
        FunctionId::Rosenbrock if d < 2 => fail("need D >= 2"),
        _ => Ok(()),
    }
}

impl BenchmarkInstance {
    pub fn with_options(
        function_id: FunctionId,
        dimension: usize,
        group_size: usize,
        instance_seed: u64,
        options: InstanceOptions,
    ) -> Result<Self> {
        check_dimensions(function_id, dimension, group_size)?;
        let (lo, hi) = options.bounds;
        let (slo, shi) = options.shift_range;
        if !(lo < hi && slo < shi && slo >= lo && shi <= hi) {
            return Err(Error::InvalidConfig(format!(
                "shift range [{slo}, {shi}] must lie within bounds [{lo}, {hi}]"
            )));
        }

        let mut rng = RngStream::new(instance_seed, "instance", 0);
        let mut shift: Vec<f64> = (0..dimension).map(|_| rng.uniform(slo, shi)).collect();
        if function_id.rosenbrock_based() {
            for o in &mut shift {
                *o = o.min(shi - 1.0);
            }
        }
        let mut permutation: Vec<usize> = (0..dimension).collect();
        rng.shuffle(&mut permutation);

        let instance = Self {
            function_id,
            dimension,
            group_size,
            shift,
            permutation,
            instance_seed,
            bounds: (lo, hi),
        };
        let optimum = instance.optimum();
        if optimum.iter().any(|&v| v < lo || v > hi) {
            return Err(Error::InvalidConfig("optimum falls outside the bounds".into()));
        }
        Ok(instance)
    }

    pub fn function_id(&self) -> FunctionId {
        self.function_id
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn group_size(&self) -> usize {
        self.group_size
    }

    pub fn shift(&self) -> &[f64] {
        &self.shift
    }

    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    pub fn instance_seed(&self) -> u64 {
        self.instance_seed
    }

    pub fn bounds(&self) -> (f64, f64) {
        self.bounds
    }

    pub fn problem_spec(&self) -> ProblemSpec {
        ProblemSpec::uniform(self.dimension, self.bounds.0, self.bounds.1, Direction::Minimize)
            .expect("instance bounds validated at construction")
    }

    /// The global minimizer: `o`, or `o + 1` for the Rosenbrock-based functions.
    pub fn optimum(&self) -> Vec<f64> {
        if self.function_id.rosenbrock_based() {
            self.shift.iter().map(|o| o + 1.0).collect()
        } else {
            self.shift.clone()
        }
    }

    /// Permutation positions grouped into the blocks each term of the
    /// function reads, paired with the term kind.
    pub fn blocks(&self) -> Vec<(BlockKind, &[usize])> {
        let p = &self.permutation[..];
        let m = self.group_size;
        let d = self.dimension;
        match self.function_id {
            FunctionId::F1 => vec![
                (BlockKind::WeightedSchwefel, &p[..m]),
                (BlockKind::Sphere, &p[m..]),
            ],
            FunctionId::F2 => {
                let mut blocks: Vec<_> = p[..d / 2]
                    .chunks(m)
                    .map(|c| (BlockKind::Schwefel, c))
                    .collect();
                blocks.push((BlockKind::Sphere, &p[d / 2..]));
                blocks
            }
            FunctionId::F3 => p.chunks(m).map(|c| (BlockKind::Schwefel, c)).collect(),
            FunctionId::F5 => p.chunks(m).map(|c| (BlockKind::Rosenbrock, c)).collect(),
            FunctionId::F4 | FunctionId::Schwefel12 => vec![(BlockKind::NaturalSchwefel, p)],
            FunctionId::Sphere => vec![(BlockKind::NaturalSphere, p)],
            FunctionId::Rosenbrock => vec![(BlockKind::NaturalRosenbrock, p)],
        }
    }

    pub fn evaluate_unchecked(&self, x: &[f64]) -> f64 {
        let o = &self.shift;
        fn shifted<'a>(
            x: &'a [f64],
            o: &'a [f64],
            idx: &'a [usize],
        ) -> impl Iterator<Item = f64> + 'a {
            idx.iter().map(move |&k| x[k] - o[k])
        }
        let gather = |idx| shifted(x, o, idx);
        let natural = || x.iter().zip(o).map(|(a, b)| a - b);
        let p = &self.permutation[..];
        let m = self.group_size;
        let d = self.dimension;
        match self.function_id {
            FunctionId::F1 => {
                schwefel12_iter(gather(&p[..m])) * F1_SCHWEFEL_WEIGHT + sphere_iter(gather(&p[m..]))
            }
            FunctionId::F2 => {
                p[..d / 2]
                    .chunks(m)
                    .map(|c| schwefel12_iter(gather(c)))
                    .sum::<f64>()
                    + sphere_iter(gather(&p[d / 2..]))
            }
            FunctionId::F3 => p.chunks(m).map(|c| schwefel12_iter(gather(c))).sum(),
            FunctionId::F5 => p.chunks(m).map(|c| rosenbrock_iter(gather(c))).sum(),
            FunctionId::F4 | FunctionId::Schwefel12 => schwefel12_iter(natural()),
            FunctionId::Sphere => sphere_iter(natural()),
            FunctionId::Rosenbrock => rosenbrock_iter(natural()),
        }
    }

    pub fn evaluate(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                got: x.len(),
            });
        }
        Ok(self.evaluate_unchecked(x))
    }
}

/// Which base function a block of permutation positions feeds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockKind {
    WeightedSchwefel,
    Schwefel,
    Sphere,
    Rosenbrock,
    /// Unpermuted: the block holds positions but the function reads `z` in index order.
    NaturalSchwefel,
    NaturalSphere,
    NaturalRosenbrock,
}

impl Objective for BenchmarkInstance {
    fn evaluate(&self, x: &[f64]) -> Result<f64> {
        BenchmarkInstance::evaluate(self, x)
    }
}
