//! Brute-force accurate complements over a discretized remainder.

use crate::base::{complement_indices, compose, strictly_better, Direction, Objective, PartialSolution};
use crate::error::{Error, Result};
use crate::par::{map_indexed, ExecMode};

/// Default cap on the number of composed evaluations a grid may demand.
pub const DEFAULT_GRID_CAP: u64 = 1_000_000;

const CHUNK: usize = 4096;

/// Per-dimension grid points over a set of coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    indices: Vec<usize>,
    points: Vec<Vec<f64>>,
    cap: u64,
}

impl GridSpec {
    pub fn new(indices: Vec<usize>, points: Vec<Vec<f64>>) -> Result<Self> {
        Self::with_cap(indices, points, DEFAULT_GRID_CAP)
    }

    pub fn with_cap(indices: Vec<usize>, points: Vec<Vec<f64>>, cap: u64) -> Result<Self> {
        if indices.len() != points.len() {
            return Err(Error::DimensionMismatch {
                expected: indices.len(),
                got: points.len(),
            });
        }
        if points.iter().any(|p| p.len() < 2) {
            return Err(Error::InvalidConfig("every grid dimension needs >= 2 points".into()));
        }
        if points.iter().flatten().any(|v| !v.is_finite()) {
            return Err(Error::NonFiniteValue);
        }
        // Reject duplicate coordinates through the partial-solution check.
        PartialSolution::new(indices.clone(), vec![0.0; indices.len()])?;
        let grid = Self { indices, points, cap };
        grid.check_cap()?;
        Ok(grid)
    }

    /// Evenly spaced points on `[lo, hi]`, the same for every coordinate.
    pub fn uniform(indices: Vec<usize>, lo: f64, hi: f64, per_dim: usize) -> Result<Self> {
        let pts: Vec<f64> = (0..per_dim)
            .map(|k| lo + (hi - lo) * k as f64 / (per_dim.max(2) - 1) as f64)
            .collect();
        let points = vec![pts; indices.len()];
        Self::new(indices, points)
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    /// Number of grid vectors.
    pub fn size(&self) -> u128 {
        self.points
            .iter()
            .map(|p| p.len() as u128)
            .try_fold(1u128, |acc, n| acc.checked_mul(n))
            .unwrap_or(u128::MAX)
    }

    fn check_cap(&self) -> Result<()> {
        let size = self.size();
        if size > u128::from(self.cap) {
            return Err(Error::GridTooLarge { size, cap: self.cap });
        }
        Ok(())
    }

    /// The grid vector at `linear` in lexicographic order (last coordinate fastest).
    pub fn vector_at(&self, mut linear: usize) -> PartialSolution {
        let mut values = vec![0.0; self.points.len()];
        for (slot, pts) in values.iter_mut().zip(&self.points).rev() {
            *slot = pts[linear % pts.len()];
            linear /= pts.len();
        }
        PartialSolution::new(self.indices.clone(), values).expect("indices validated")
    }

    /// All grid vectors in lexicographic order.
    pub fn vectors(&self) -> Vec<PartialSolution> {
        (0..self.size() as usize).map(|k| self.vector_at(k)).collect()
    }
}

fn check_covers(partial: &PartialSolution, grid: &GridSpec) -> Result<()> {
    let dimension = partial.len() + grid.indices.len();
    let mut expected = complement_indices(partial.indices(), dimension);
    let mut got = grid.indices.clone();
    expected.sort_unstable();
    got.sort_unstable();
    if expected != got {
        return Err(Error::OverlapOrGap { dimension });
    }
    Ok(())
}

fn pick(
    best: Option<(usize, f64)>,
    challenger: (usize, f64),
    direction: Direction,
) -> Result<Option<(usize, f64)>> {
    Ok(match best {
        None => Some(challenger),
        Some(b) if strictly_better(challenger.1, b.1, direction)? => Some(challenger),
        Some(b) if challenger.1 == b.1 && challenger.0 < b.0 => Some(challenger),
        keep => keep,
    })
}

/// Exhaustively composes `partial` with every grid vector and returns the best
/// complement and its value. Ties go to the lexicographically smallest grid
/// index. The evaluations are not metered.
pub fn accurate_complement<F: Objective + ?Sized>(
    f: &F,
    partial: &PartialSolution,
    grid: &GridSpec,
    direction: Direction,
    mode: ExecMode,
) -> Result<(PartialSolution, f64)> {
    grid.check_cap()?;
    check_covers(partial, grid)?;
    let total = grid.size() as usize;
    let chunks = total.div_ceil(CHUNK);
    let partial_best = map_indexed(chunks, mode, |c| -> Result<Option<(usize, f64)>> {
        let mut best = None;
        for k in c * CHUNK..((c + 1) * CHUNK).min(total) {
            let x = compose(partial, &grid.vector_at(k))?;
            let v = f.evaluate(x.values())?;
            if v.is_nan() {
                return Err(Error::NonFiniteValue);
            }
            best = pick(best, (k, v), direction)?;
        }
        Ok(best)
    });
    let mut best = None;
    for chunk in partial_best {
        if let Some(c) = chunk? {
            best = pick(best, c, direction)?;
        }
    }
    let (k, v) = best.expect("grid has at least one vector");
    Ok((grid.vector_at(k), v))
}
