//! Approximate complements: the best remainder among the population rows.

use crate::base::{project, strictly_better, FullSolution, Objective, PartialSolution};
use crate::error::Result;
use crate::framework::population::Population;
use crate::framework::session::RunSession;

#[derive(Debug, Clone, PartialEq)]
pub struct ComplementChoice {
    /// Row whose remainder completes the partial solution.
    pub row_index: usize,
    /// Objective value of the composed solution.
    pub value: f64,
    /// Fresh FEs spent on the search.
    pub fresh_evals: u64,
    /// The composed solution, with `value` cached.
    pub solution: FullSolution,
}

/// Composes `partial` with the remainder of every row in `rows` and returns
/// the best combination. Ties keep the lowest row index.
///
/// When `own_row` is given and that row carries a cached value, the row itself
/// is taken as its own composition without spending an FE; the caller must
/// guarantee `partial` equals that row's values on its indices.
pub fn best_complement<F: Objective + ?Sized>(
    f: &F,
    partial: &PartialSolution,
    rows: &[FullSolution],
    own_row: Option<usize>,
    session: &mut RunSession,
) -> Result<ComplementChoice> {
    let before = session.consumed();
    let mut best: Option<(usize, f64, FullSolution)> = None;
    for (k, row) in rows.iter().enumerate() {
        let mut candidate = match (own_row, row.cached_value()) {
            (Some(own), Some(_)) if own == k => row.clone(),
            _ => row.splice(partial)?,
        };
        let value = session.eval(f, &mut candidate)?;
        let replace = match &best {
            None => true,
            Some((_, b, _)) => strictly_better(value, *b, session.direction())?,
        };
        if replace {
            best = Some((k, value, candidate));
        }
    }
    let (row_index, value, solution) = best.expect("population is never empty");
    Ok(ComplementChoice {
        row_index,
        value,
        fresh_evals: session.consumed() - before,
        solution,
    })
}

/// Approximate complement of row `j`'s own partial solution on group `i`.
pub fn approximate_complement<F: Objective + ?Sized>(
    j: usize,
    i: usize,
    pop: &Population,
    f: &F,
    session: &mut RunSession,
) -> Result<ComplementChoice> {
    let partial = project(&pop.rows[j], pop.grouping.group(i))?;
    best_complement(f, &partial, &pop.rows, Some(j), session)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::{Direction, Grouping};
    use crate::dachc::HcState;
    use crate::objectives::sphere;

    fn sph(x: &[f64]) -> f64 {
        sphere(x).unwrap()
    }

    fn population(rows: &[[f64; 2]], session: &mut RunSession) -> Population {
        let rows = rows
            .iter()
            .map(|r| {
                let mut x = FullSolution::new(r.to_vec());
                session.eval(&sph, &mut x).unwrap();
                x
            })
            .collect::<Vec<_>>();
        let n = rows.len();
        Population {
            rows,
            step_sizes: HcState::new(n, 2, 2),
            grouping: Grouping::new(vec![vec![0], vec![1]], 2).unwrap(),
        }
    }

    #[test]
    fn single_row_is_free() {
        let mut s = RunSession::new(100, Direction::Minimize, 1);
        let pop = population(&[[1.0, 2.0]], &mut s);
        let c = approximate_complement(0, 0, &pop, &sph, &mut s).unwrap();
        assert_eq!((c.row_index, c.value, c.fresh_evals), (0, 5.0, 0));
    }

    #[test]
    fn picks_better_row() {
        // Row 0 = (1, 2) -> 5 cached. Row 1 = (9, 1.4142...) gives partial x_0 = 1
        // composed with x_1 = sqrt(2): 1 + 2 = 3.
        let mut s = RunSession::new(100, Direction::Minimize, 1);
        let r = 2f64.sqrt();
        let pop = population(&[[1.0, 2.0], [9.0, r]], &mut s);
        let c = approximate_complement(0, 0, &pop, &sph, &mut s).unwrap();
        assert_eq!(c.row_index, 1);
        assert_eq!(c.value, 1.0 + r * r);
        assert_eq!(c.fresh_evals, 1);
        assert_eq!(c.solution.values(), &[1.0, r]);
    }

    #[test]
    fn ties_keep_lowest_row() {
        let mut s = RunSession::new(100, Direction::Minimize, 1);
        let pop = population(&[[1.0, 2.0], [9.0, -2.0]], &mut s);
        let c = approximate_complement(0, 0, &pop, &sph, &mut s).unwrap();
        assert_eq!(c.row_index, 0);
        let c = approximate_complement(1, 0, &pop, &sph, &mut s).unwrap();
        assert_eq!(c.row_index, 0);
        assert_eq!(c.value, 85.0);
    }

    #[test]
    fn uncached_own_row_costs_an_eval() {
        let mut s = RunSession::new(100, Direction::Minimize, 1);
        let mut pop = population(&[[1.0, 2.0], [3.0, 4.0]], &mut s);
        pop.rows[0].values_mut();
        let c = approximate_complement(0, 0, &pop, &sph, &mut s).unwrap();
        assert_eq!(c.fresh_evals, 2);
    }
}
