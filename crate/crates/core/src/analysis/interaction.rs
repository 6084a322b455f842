//! Sampling-based detection of interacting variable pairs.
//!
//! Variables `i` and `j` interact when two values on `i` swap rank as the
//! value on `j` changes. A returned witness proves interaction; finding none
//! after all trials is only evidence of separability.

use crate::base::{Objective, ProblemSpec, RngStream};
use crate::error::{Error, Result};

/// Relative margin that a strict inequality must clear.
pub const RANK_MARGIN: f64 = 1e-12;

fn clearly_less(a: f64, b: f64) -> bool {
    b - a > RANK_MARGIN * a.abs().max(b.abs()).max(1.0)
}

/// Base point plus two values per coordinate, with
/// `values = [f(xi, xj), f(xi', xj), f(xi, xj'), f(xi', xj')]` satisfying
/// `values[0] < values[1]` and `values[2] > values[3]`.
#[derive(Debug, Clone, PartialEq)]
pub struct InteractionWitness {
    pub base: Vec<f64>,
    pub i: usize,
    pub j: usize,
    pub xi: f64,
    pub xi_prime: f64,
    pub xj: f64,
    pub xj_prime: f64,
    pub values: [f64; 4],
}

impl InteractionWitness {
    fn point(&self, vi: f64, vj: f64) -> Vec<f64> {
        let mut x = self.base.clone();
        x[self.i] = vi;
        x[self.j] = vj;
        x
    }

    #[allow(clippy::too_many_arguments)]
    fn quad<F: Objective + ?Sized>(f: &F, base: &[f64], i: usize, j: usize, xi: f64, xi2: f64, xj: f64, xj2: f64) -> Result<[f64; 4]> {
        let mut x = base.to_vec();
        let mut at = |vi: f64, vj: f64| -> Result<f64> {
            x[i] = vi;
            x[j] = vj;
            let v = f.evaluate(&x)?;
            if v.is_nan() {
                return Err(Error::NonFiniteValue);
            }
            Ok(v)
        };
        Ok([at(xi, xj)?, at(xi2, xj)?, at(xi, xj2)?, at(xi2, xj2)?])
    }

    /// Re-evaluates the four points from scratch and checks the rank flip.
    pub fn verify<F: Objective + ?Sized>(&self, f: &F) -> Result<bool> {
        let v = [
            f.evaluate(&self.point(self.xi, self.xj))?,
            f.evaluate(&self.point(self.xi_prime, self.xj))?,
            f.evaluate(&self.point(self.xi, self.xj_prime))?,
            f.evaluate(&self.point(self.xi_prime, self.xj_prime))?,
        ];
        Ok(clearly_less(v[0], v[1]) && clearly_less(v[3], v[2]))
    }
}

/// Samples up to `trials` random quadruples looking for a rank flip between
/// coordinates `i` and `j`.
pub fn detect_interaction<F: Objective + ?Sized>(
    f: &F,
    i: usize,
    j: usize,
    spec: &ProblemSpec,
    trials: u64,
    rng: &mut RngStream,
) -> Result<Option<InteractionWitness>> {
    let d = spec.dimension();
    if i == j || i >= d || j >= d {
        return Err(Error::InvalidConfig(format!(
            "need two distinct coordinates below {d}, got {i} and {j}"
        )));
    }
    if trials == 0 {
        return Err(Error::InvalidConfig("trials must be >= 1".into()));
    }
    let bounds = spec.bounds();
    for _ in 0..trials {
        let base: Vec<f64> = bounds.iter().map(|&(lo, hi)| rng.uniform(lo, hi)).collect();
        let (xi, xj) = (base[i], base[j]);
        let xi2 = rng.uniform(bounds[i].0, bounds[i].1);
        let xj2 = rng.uniform(bounds[j].0, bounds[j].1);
        let v = InteractionWitness::quad(f, &base, i, j, xi, xi2, xj, xj2)?;
        let oriented = if clearly_less(v[0], v[1]) && clearly_less(v[3], v[2]) {
            Some((xi, xi2, v))
        } else if clearly_less(v[1], v[0]) && clearly_less(v[2], v[3]) {
            Some((xi2, xi, [v[1], v[0], v[3], v[2]]))
        } else {
            None
        };
        if let Some((a, b, values)) = oriented {
            return Ok(Some(InteractionWitness {
                base,
                i,
                j,
                xi: a,
                xi_prime: b,
                xj,
                xj_prime: xj2,
                values,
            }));
        }
    }
    Ok(None)
}
