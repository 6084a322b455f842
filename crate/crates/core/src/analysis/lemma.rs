//! Probability of accurately complementing a sub-problem: the product of the
//! per-variable probabilities and its AM-GM bound.

use crate::error::{Error, Result};

/// Relative tolerance for treating the product and the bound as equal.
pub const TIGHTNESS_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityReport {
    pub probabilities: Vec<f64>,
    /// `Π p_j`
    pub product: f64,
    /// Arithmetic mean of the probabilities (1 for an empty remainder).
    pub mean: f64,
    /// `mean^(D − d_i)`
    pub bound: f64,
}

impl ProbabilityReport {
    /// Whether the AM-GM inequality holds with equality.
    pub fn is_tight(&self) -> bool {
        (self.bound - self.product).abs() <= TIGHTNESS_TOLERANCE * self.bound.max(f64::MIN_POSITIVE)
    }
}

/// Builds the report for the `D − d_i` variables outside sub-problem `i`.
pub fn lemma1_report(probabilities: &[f64], dimension: usize, group_size: usize) -> Result<ProbabilityReport> {
    let remainder = dimension
        .checked_sub(group_size)
        .ok_or(Error::DimensionMismatch { expected: dimension, got: group_size })?;
    if probabilities.len() != remainder {
        return Err(Error::DimensionMismatch {
            expected: remainder,
            got: probabilities.len(),
        });
    }
    if let Some(&p) = probabilities.iter().find(|p| !(0.0..=1.0).contains(*p)) {
        return Err(Error::OutOfRangeProbability(p));
    }
    let product: f64 = probabilities.iter().product();
    let mean = if remainder == 0 {
        1.0
    } else {
        probabilities.iter().sum::<f64>() / remainder as f64
    };
    let bound = mean.powi(remainder as i32);
    let report = ProbabilityReport {
        probabilities: probabilities.to_vec(),
        product,
        mean,
        bound,
    };
    assert!(
        report.product <= report.bound || report.is_tight(),
        "AM-GM violated: {} > {}",
        report.product,
        report.bound
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        let r = lemma1_report(&[0.5, 0.5, 0.5], 5, 2).unwrap();
        assert_eq!((r.product, r.bound), (0.125, 0.125));
        assert!(r.is_tight());

        let r = lemma1_report(&[1.0, 1.0], 4, 2).unwrap();
        assert_eq!((r.product, r.bound), (1.0, 1.0));

        let r = lemma1_report(&[0.9, 0.1], 2, 0).unwrap();
        assert!((r.product - 0.09).abs() < 1e-15);
        assert!((r.bound - 0.25).abs() < 1e-15);
        assert!(!r.is_tight());
    }

    #[test]
    fn errors() {
        assert!(matches!(lemma1_report(&[1.5], 1, 0), Err(Error::OutOfRangeProbability(_))));
        assert!(matches!(lemma1_report(&[0.5], 3, 1), Err(Error::DimensionMismatch { .. })));
        let r = lemma1_report(&[], 3, 3).unwrap();
        assert_eq!((r.product, r.bound), (1.0, 1.0));
    }

    proptest! {
        #[test]
        fn amgm(ps in prop::collection::vec(0.0f64..=1.0, 1..30)) {
            let r = lemma1_report(&ps, ps.len(), 0).unwrap();
            prop_assert!(r.product <= r.bound * (1.0 + TIGHTNESS_TOLERANCE));
        }
    }
}
