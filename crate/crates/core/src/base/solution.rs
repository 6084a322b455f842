//! Solution vectors, partial solutions and index partitions.
//!
//! Dimension indices are zero-based throughout the crate: a problem of
//! dimension `D` has coordinates `0..D`.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Direction {
    #[default]
    Minimize,
    Maximize,
}

/// `true` when `challenger` is at least as good as `incumbent`.
///
/// Ties go to the challenger, so a mutation that lands on an equal value
/// counts as a success.
pub fn better(challenger: f64, incumbent: f64, direction: Direction) -> Result<bool> {
    if challenger.is_nan() || incumbent.is_nan() {
        return Err(Error::NonFiniteValue);
    }
    Ok(match direction {
        Direction::Minimize => challenger <= incumbent,
        Direction::Maximize => challenger >= incumbent,
    })
}

/// Strict variant of [`better`], used where ties must keep the earlier candidate.
pub fn strictly_better(challenger: f64, incumbent: f64, direction: Direction) -> Result<bool> {
    if challenger.is_nan() || incumbent.is_nan() {
        return Err(Error::NonFiniteValue);
    }
    Ok(match direction {
        Direction::Minimize => challenger < incumbent,
        Direction::Maximize => challenger > incumbent,
    })
}

/// Box-bounded search space with an optimization direction.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemSpec {
    bounds: Vec<(f64, f64)>,
    direction: Direction,
}

impl ProblemSpec {
    pub fn new(bounds: Vec<(f64, f64)>, direction: Direction) -> Result<Self> {
        if bounds.is_empty() {
            return Err(Error::DimensionTooSmall { got: 0, min: 1 });
        }
        for &(lo, hi) in &bounds {
            if !(lo.is_finite() && hi.is_finite()) {
                return Err(Error::NonFiniteValue);
            }
            if lo >= hi {
                return Err(Error::InvalidConfig(format!("empty interval [{lo}, {hi}]")));
            }
        }
        Ok(Self { bounds, direction })
    }

    /// Same interval on every coordinate.
    pub fn uniform(dimension: usize, lo: f64, hi: f64, direction: Direction) -> Result<Self> {
        Self::new(vec![(lo, hi); dimension], direction)
    }

    pub fn dimension(&self) -> usize {
        self.bounds.len()
    }

    pub fn bounds(&self) -> &[(f64, f64)] {
        &self.bounds
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn contains(&self, values: &[f64]) -> bool {
        values.len() == self.bounds.len()
            && values
                .iter()
                .zip(&self.bounds)
                .all(|(&v, &(lo, hi))| v >= lo && v <= hi)
    }
}

/// A full-dimensional point with an optional cached objective value.
///
/// Any mutable access to the values drops the cache.
#[derive(Debug, Clone, PartialEq)]
pub struct FullSolution {
    values: Vec<f64>,
    cached_value: Option<f64>,
}

impl FullSolution {
    pub fn new(values: Vec<f64>) -> Self {
        Self {
            values,
            cached_value: None,
        }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn dimension(&self) -> usize {
        self.values.len()
    }

    pub fn cached_value(&self) -> Option<f64> {
        self.cached_value
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        self.cached_value = None;
        &mut self.values
    }

    pub fn set_values(&mut self, values: Vec<f64>) {
        self.values = values;
        self.cached_value = None;
    }

    /// Records the objective value of the current vector. Only the
    /// evaluation path may call this.
    pub(crate) fn set_cached(&mut self, value: f64) {
        self.cached_value = Some(value);
    }

    /// Copy of `self` with `partial` written over its coordinates.
    /// Equivalent to composing `partial` with this row's remainder.
    pub fn splice(&self, partial: &PartialSolution) -> Result<FullSolution> {
        let mut values = self.values.clone();
        for (&k, &v) in partial.indices.iter().zip(&partial.values) {
            let dimension = values.len();
            *values
                .get_mut(k)
                .ok_or(Error::IndexOutOfRange { index: k, dimension })? = v;
        }
        Ok(FullSolution::new(values))
    }
}

/// Values of a solution restricted to a subset of coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct PartialSolution {
    indices: Vec<usize>,
    values: Vec<f64>,
}

impl PartialSolution {
    pub fn new(indices: Vec<usize>, values: Vec<f64>) -> Result<Self> {
        if indices.len() != values.len() {
            return Err(Error::DimensionMismatch {
                expected: indices.len(),
                got: values.len(),
            });
        }
        let mut sorted = indices.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::OverlapOrGap {
                dimension: sorted.last().map_or(0, |&k| k + 1),
            });
        }
        Ok(Self { indices, values })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

/// Joins two partial solutions over complementary index sets into a full vector.
///
/// The dimension is `a.len() + b.len()`; the two index sets must be disjoint
/// and cover `0..D` exactly. The result carries no cached value.
pub fn compose(a: &PartialSolution, b: &PartialSolution) -> Result<FullSolution> {
    let dimension = a.len() + b.len();
    let mut values = vec![0.0; dimension];
    let mut seen = vec![false; dimension];
    for part in [a, b] {
        for (&k, &v) in part.indices.iter().zip(&part.values) {
            if k >= dimension || seen[k] {
                return Err(Error::OverlapOrGap { dimension });
            }
            seen[k] = true;
            values[k] = v;
        }
    }
    Ok(FullSolution::new(values))
}

/// Restriction of `x` to `indices`, in the order given.
pub fn project(x: &FullSolution, indices: &[usize]) -> Result<PartialSolution> {
    let dimension = x.dimension();
    let values = indices
        .iter()
        .map(|&k| {
            x.values
                .get(k)
                .copied()
                .ok_or(Error::IndexOutOfRange { index: k, dimension })
        })
        .collect::<Result<Vec<_>>>()?;
    PartialSolution::new(indices.to_vec(), values)
}

/// Sorted indices of `0..dimension` not present in `indices`.
pub fn complement_indices(indices: &[usize], dimension: usize) -> Vec<usize> {
    let mut member = vec![false; dimension];
    for &k in indices {
        if k < dimension {
            member[k] = true;
        }
    }
    (0..dimension).filter(|&k| !member[k]).collect()
}

/// A partition of `0..D` into disjoint sub-problem index sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grouping {
    groups: Vec<Vec<usize>>,
    dimension: usize,
}

impl Grouping {
    pub fn new(groups: Vec<Vec<usize>>, dimension: usize) -> Result<Self> {
        let mut seen = vec![false; dimension];
        let mut total = 0;
        for &k in groups.iter().flatten() {
            if k >= dimension {
                return Err(Error::IndexOutOfRange { index: k, dimension });
            }
            if seen[k] {
                return Err(Error::OverlapOrGap { dimension });
            }
            seen[k] = true;
            total += 1;
        }
        if total != dimension || groups.iter().any(Vec::is_empty) {
            return Err(Error::OverlapOrGap { dimension });
        }
        Ok(Self { groups, dimension })
    }

    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    pub fn group(&self, i: usize) -> &[usize] {
        &self.groups[i]
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Indices of every group except `i`, sorted.
    pub fn remainder(&self, i: usize) -> Vec<usize> {
        complement_indices(&self.groups[i], self.dimension)
    }
}
