//! Least-squares fit of `ln(best value)` against FEs.

use crate::error::{Error, Result};
use crate::framework::{ConvergenceTrace, TracePoint};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogLinearFit {
    /// Change in `ln(value)` per FE.
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    /// Number of trace points used.
    pub points: usize,
    /// The log-values had zero variance; `r_squared` is reported as 0.
    pub degenerate: bool,
    /// Non-positive values inside the window forced the fit onto the
    /// longest positive suffix.
    pub positive_suffix_only: bool,
}

/// Fits over the trailing `window` fraction of the trace's FE range.
pub fn loglinear_fit(trace: &ConvergenceTrace, window: f64) -> Result<LogLinearFit> {
    if !(window > 0.0 && window <= 1.0) {
        return Err(Error::InvalidConfig(format!("window {window} outside (0, 1]")));
    }
    let (Some(first), Some(last)) = (trace.points.first(), trace.points.last()) else {
        return Err(Error::NonPositiveValues);
    };
    let start = last.fe as f64 - window * (last.fe - first.fe) as f64;
    let windowed: Vec<TracePoint> = trace
        .points
        .iter()
        .copied()
        .filter(|p| p.fe as f64 >= start)
        .collect();
    let suffix_start = windowed
        .iter()
        .rposition(|p| p.best_value <= 0.0 || !p.best_value.is_finite())
        .map_or(0, |k| k + 1);
    let used = &windowed[suffix_start..];
    if used.len() < 2 {
        return Err(Error::NonPositiveValues);
    }

    let n = used.len() as f64;
    let xs: Vec<f64> = used.iter().map(|p| p.fe as f64).collect();
    let ys: Vec<f64> = used.iter().map(|p| p.best_value.ln()).collect();
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    if sxx == 0.0 {
        return Err(Error::InvalidConfig("fit window spans a single FE count".into()));
    }
    let slope = sxy / sxx;
    let degenerate = syy == 0.0;
    let r_squared = if degenerate { 0.0 } else { (sxy * sxy) / (sxx * syy) };
    Ok(LogLinearFit {
        slope,
        intercept: my - slope * mx,
        r_squared,
        points: used.len(),
        degenerate,
        positive_suffix_only: suffix_start > 0,
    })
}

/// Pointwise median of traces sampled at identical FE counts.
pub fn median_trace(traces: &[ConvergenceTrace]) -> Result<ConvergenceTrace> {
    let Some(reference) = traces.first() else {
        return Ok(ConvergenceTrace::new());
    };
    for t in traces {
        if t.len() != reference.len() || t.points.iter().zip(&reference.points).any(|(a, b)| a.fe != b.fe) {
            return Err(Error::InvalidConfig("traces are sampled at different FE counts".into()));
        }
    }
    let points = (0..reference.len())
        .map(|k| {
            let mut vals: Vec<f64> = traces.iter().map(|t| t.points[k].best_value).collect();
            TracePoint {
                fe: reference.points[k].fe,
                best_value: median(&mut vals),
            }
        })
        .collect();
    Ok(ConvergenceTrace { points })
}

/// Median of a non-empty slice; the mean of the two middle values for even lengths.
pub fn median(values: &mut [f64]) -> f64 {
    values.sort_by(f64::total_cmp);
    let n = values.len();
    if n % 2 == 1 {
        values[n / 2]
    } else {
        0.5 * (values[n / 2 - 1] + values[n / 2])
    }
}
