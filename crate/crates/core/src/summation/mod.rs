//! Exact evaluation of unilateral, bilateral and nested multi-sums of
//! q-series terms, cut off by declared valuation lower bounds.

mod engine;
mod generator;

pub use engine::{evaluate, evaluate_with_stats, SumSpec, SumStats, GUARD};
pub use generator::{
    multisum_bilateral_inner, multisum_independent, multisum_ordered, sum_bilateral,
    sum_bilateral_laurent, sum_unilateral, IndexDomain, LaurentGenerator, LevelFn, MultiTermSpec,
    SumMode, TermGenerator,
};
