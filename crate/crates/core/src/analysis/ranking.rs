use std::cmp::Ordering;

use crate::analysis::grid::{accurate_complement, GridSpec};
use crate::base::{compose, strictly_better, Direction, Objective, PartialSolution};
use crate::error::{Error, Result};
use crate::par::ExecMode;

/// Best composed value of `partial` over a finite set of complements.
pub fn approximate_value<F: Objective + ?Sized>(
    f: &F,
    partial: &PartialSolution,
    complements: &[PartialSolution],
    direction: Direction,
) -> Result<f64> {
    let mut best: Option<f64> = None;
    for c in complements {
        let v = f.evaluate(compose(partial, c)?.values())?;
        if v.is_nan() {
            return Err(Error::NonFiniteValue);
        }
        if best.map_or(Ok(true), |b| strictly_better(v, b, direction))? {
            best = Some(v);
        }
    }
    best.ok_or_else(|| Error::InvalidConfig("need at least one complement".into()))
}

fn order(a: f64, b: f64) -> Ordering {
    a.partial_cmp(&b).expect("values checked for NaN")
}

/// Fraction of partial-solution pairs ordered the same way by their
/// approximate values (best over `complements`) and by their accurate values
/// (best over the whole grid).
pub fn ranking_agreement<F: Objective + ?Sized>(
    f: &F,
    partials: &[PartialSolution],
    complements: &[PartialSolution],
    grid: &GridSpec,
    direction: Direction,
    mode: ExecMode,
) -> Result<f64> {
    if partials.len() < 2 {
        return Err(Error::InvalidConfig("ranking needs at least two partials".into()));
    }
    let mut accurate = Vec::with_capacity(partials.len());
    let mut approximate = Vec::with_capacity(partials.len());
    for p in partials {
        accurate.push(accurate_complement(f, p, grid, direction, mode)?.1);
        approximate.push(approximate_value(f, p, complements, direction)?);
    }
    let mut pairs = 0u64;
    let mut concordant = 0u64;
    for a in 0..partials.len() {
        for b in a + 1..partials.len() {
            pairs += 1;
            if order(accurate[a], accurate[b]) == order(approximate[a], approximate[b]) {
                concordant += 1;
            }
        }
    }
    Ok(concordant as f64 / pairs as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objectives::schwefel12;

    fn sch(x: &[f64]) -> f64 {
        schwefel12(x).unwrap()
    }

    fn on_dim0(v: f64) -> PartialSolution {
        PartialSolution::new(vec![0], vec![v]).unwrap()
    }

    #[test]
    fn full_grid_population_agrees_perfectly() {
        let grid = GridSpec::new(vec![1], vec![vec![-3.0, -1.0, 0.5, 2.0]]).unwrap();
        let partials: Vec<_> = [-2.0, -0.5, 0.0, 1.0, 3.0].map(on_dim0).to_vec();
        let r = ranking_agreement(&sch, &partials, &grid.vectors(), &grid, Direction::Minimize, ExecMode::Sequential).unwrap();
        assert_eq!(r, 1.0);
    }

    #[test]
    fn single_row_population_against_enumeration() {
        // Partials x1 in {-2,-1,0,1,2}, grid x2 in {-2,0,2}, population {x2 = 2}.
        // f = x1^2 + (x1+x2)^2.
        let xs = [-2.0, -1.0, 0.0, 1.0, 2.0];
        let grid_pts = [-2.0, 0.0, 2.0];
        let f = |a: f64, b: f64| a * a + (a + b) * (a + b);
        let acc: Vec<f64> = xs
            .iter()
            .map(|&a| grid_pts.iter().map(|&b| f(a, b)).fold(f64::INFINITY, f64::min))
            .collect();
        let apx: Vec<f64> = xs.iter().map(|&a| f(a, 2.0)).collect();
        let mut agree = 0;
        let mut pairs = 0;
        for a in 0..5 {
            for b in a + 1..5 {
                pairs += 1;
                if acc[a].partial_cmp(&acc[b]) == apx[a].partial_cmp(&apx[b]) {
                    agree += 1;
                }
            }
        }
        let expected = agree as f64 / pairs as f64;
        // acc = [4, 2, 0, 2, 4]; apx = [4, 2, 4, 10, 20] -> 5 of 10 pairs agree.
        assert_eq!(expected, 0.5);

        let grid = GridSpec::new(vec![1], vec![grid_pts.to_vec()]).unwrap();
        let partials: Vec<_> = xs.map(on_dim0).to_vec();
        let pop = vec![PartialSolution::new(vec![1], vec![2.0]).unwrap()];
        let r = ranking_agreement(&sch, &partials, &pop, &grid, Direction::Minimize, ExecMode::Sequential).unwrap();
        assert_eq!(r, expected);
    }

    #[test]
    fn needs_two_partials() {
        let grid = GridSpec::new(vec![1], vec![vec![0.0, 1.0]]).unwrap();
        assert!(ranking_agreement(&sch, &[on_dim0(1.0)], &grid.vectors(), &grid, Direction::Minimize, ExecMode::Sequential).is_err());
    }
}
