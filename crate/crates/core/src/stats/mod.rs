//! Nonparametric comparison of final-fitness samples.

mod mann_whitney;
mod summary;

pub use mann_whitney::{
    exact_p_value, mann_whitney_u, normal_p_value, LowerSample, MannWhitneyResult, PValueMethod,
    EXACT_MAX_TOTAL, SIGNIFICANCE_LEVEL,
};
pub use summary::{quantile, summarize, SampleSummary};
