//! Base test functions on unshifted vectors.

use crate::error::{Error, Result};

fn check(z: &[f64], min: usize) -> Result<()> {
    if z.len() < min {
        return Err(Error::DimensionTooSmall { got: z.len(), min });
    }
    if z.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFiniteValue);
    }
    Ok(())
}

/// `Σ z_k²`
pub fn sphere(z: &[f64]) -> Result<f64> {
    check(z, 1)?;
    Ok(sphere_iter(z.iter().copied()))
}

/// Schwefel 1.2: `Σ_i (Σ_{j≤i} z_j)²`, via running prefix sums.
pub fn schwefel12(z: &[f64]) -> Result<f64> {
    check(z, 1)?;
    Ok(schwefel12_iter(z.iter().copied()))
}

/// `Σ_{i<D} [100 (z_i² − z_{i+1})² + (z_i − 1)²]`
pub fn rosenbrock(z: &[f64]) -> Result<f64> {
    check(z, 2)?;
    Ok(rosenbrock_iter(z.iter().copied()))
}

#[inline]
pub(crate) fn sphere_iter(z: impl Iterator<Item = f64>) -> f64 {
    z.map(|v| v * v).sum()
}

#[inline]
pub(crate) fn schwefel12_iter(z: impl Iterator<Item = f64>) -> f64 {
    let mut prefix = 0.0;
    let mut acc = 0.0;
    for v in z {
        prefix += v;
        acc += prefix * prefix;
    }
    acc
}

#[inline]
pub(crate) fn rosenbrock_iter(mut z: impl Iterator<Item = f64>) -> f64 {
    let Some(mut prev) = z.next() else {
        return 0.0;
    };
    let mut acc = 0.0;
    for next in z {
        let a = prev * prev - next;
        let b = prev - 1.0;
        acc += 100.0 * a * a + b * b;
        prev = next;
    }
    acc
}
