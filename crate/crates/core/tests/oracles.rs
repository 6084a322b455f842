use dacopt::analysis::{accurate_complement, approximate_value, ranking_agreement, GridSpec};
use dacopt::base::{Direction, PartialSolution};
use dacopt::objectives::schwefel12;
use dacopt::par::ExecMode;
use proptest::prelude::*;

fn schwefel_fn(x: &[f64]) -> f64 {
    schwefel12(x).unwrap()
}

proptest! {
    // Complements drawn from the grid can never beat the grid optimum.
    #[test]
    fn approximate_never_beats_accurate(
        partial in prop::collection::vec(-4i32..=4, 2),
        rows in prop::collection::vec(prop::collection::vec(-4i32..=4, 2), 1..6),
    ) {
        let axis: Vec<f64> = (-4..=4).map(f64::from).collect();
        let grid = GridSpec::new(vec![2, 3], vec![axis.clone(), axis]).unwrap();
        let p = PartialSolution::new(vec![0, 1], partial.iter().map(|&v| f64::from(v)).collect()).unwrap();
        let complements: Vec<PartialSolution> = rows
            .iter()
            .map(|r| PartialSolution::new(vec![2, 3], r.iter().map(|&v| f64::from(v)).collect()).unwrap())
            .collect();
        let apx = approximate_value(&schwefel_fn, &p, &complements, Direction::Minimize).unwrap();
        let (_, acc) = accurate_complement(&schwefel_fn, &p, &grid, Direction::Minimize, ExecMode::Sequential).unwrap();
        prop_assert!(apx >= acc);
    }
}

#[test]
fn maximizing_flips_the_oracle() {
    let grid = GridSpec::new(vec![1], vec![vec![-3.0, -2.0, 0.0]]).unwrap();
    let p = PartialSolution::new(vec![0], vec![2.0]).unwrap();
    let (best, value) = accurate_complement(&schwefel_fn, &p, &grid, Direction::Maximize, ExecMode::Sequential).unwrap();
    assert_eq!(best.values(), &[0.0]);
    assert_eq!(value, 8.0);
}

#[test]
fn full_grid_population_ranks_like_the_oracle() {
    let axis = vec![-2.0, -1.0, 0.0, 1.0, 2.0];
    let grid = GridSpec::new(vec![1], vec![axis.clone()]).unwrap();
    let partials: Vec<_> = axis.iter().map(|&v| PartialSolution::new(vec![0], vec![v]).unwrap()).collect();
    let complements: Vec<_> = axis.iter().map(|&v| PartialSolution::new(vec![1], vec![v]).unwrap()).collect();
    let agreement =
        ranking_agreement(&schwefel_fn, &partials, &complements, &grid, Direction::Minimize, ExecMode::Auto).unwrap();
    assert_eq!(agreement, 1.0);
}
