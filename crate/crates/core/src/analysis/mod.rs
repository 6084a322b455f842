//! Ground-truth oracles and diagnostics: brute-force accurate complements,
//! interaction detection, the complementing-probability bound, ranking
//! agreement, and log-linear convergence fits.

mod fit;
mod grid;
mod interaction;
mod lemma;
mod ranking;

pub use fit::{loglinear_fit, median, median_trace, LogLinearFit};
pub use grid::{accurate_complement, GridSpec, DEFAULT_GRID_CAP};
pub use interaction::{detect_interaction, InteractionWitness, RANK_MARGIN};
pub use lemma::{lemma1_report, ProbabilityReport, TIGHTNESS_TOLERANCE};
pub use ranking::{approximate_value, ranking_agreement};
